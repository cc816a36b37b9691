#include "ptk/subwords.hh"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <unordered_map>

#include "ptk/errors.hh"

namespace ptk {

bool embeds(std::span<const Letter> v, std::span<const Letter> w) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < w.size() && i < v.size(); ++j)
    if (w[j] == v[i]) ++i;
  return i == v.size();
}

WordIndex::WordIndex(std::size_t alphabet_size, std::size_t k) : n_(alphabet_size), k_(k) {
  if (k > 255) throw InputError("subword length bound too large");
  offset_.push_back(0);
  std::size_t layer = 1;
  for (std::size_t len = 0; len <= k; ++len) {
    if (offset_.back() + layer > kMaxWords || (n_ > 0 && (offset_.back() + layer) * n_ > kMaxWords)) {
      throw BudgetExceeded("too many words of bounded length", kMaxWords, offset_.back() + layer);
    }
    offset_.push_back(offset_.back() + layer);
    layer *= n_;
    if (layer == 0) break;
  }
  while (offset_.size() < k + 2) offset_.push_back(offset_.back());
  const std::size_t total = offset_[k + 1];
  length_.resize(total);
  for (std::size_t len = 0; len <= k; ++len)
    for (std::size_t i = offset_[len]; i < offset_[len + 1]; ++i) length_[i] = static_cast<std::uint8_t>(len);
  append_.assign(total * n_, npos);
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t len = length_[i];
    if (len == k) continue;
    const std::size_t value = i - offset_[len];
    for (Letter a = 0; a < n_; ++a) append_[i * n_ + a] = offset_[len + 1] + value * n_ + a;
  }
}

std::shared_ptr<const WordIndex> WordIndex::get(std::size_t alphabet_size, std::size_t k) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const WordIndex>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{alphabet_size, k}];
  if (!slot) slot = std::make_shared<const WordIndex>(alphabet_size, k);
  return slot;
}

std::size_t WordIndex::index(std::span<const Letter> w) const {
  if (w.size() > k_) return npos;
  std::size_t idx = 0;
  for (Letter a : w) {
    if (a >= n_) throw InputError("letter outside the alphabet of the word index");
    idx = append(idx, a);
  }
  return idx;
}

Word WordIndex::word(std::size_t idx) const {
  const std::size_t len = length_.at(idx);
  std::size_t value = idx - offset_[len];
  Word w(len);
  for (std::size_t i = len; i > 0; --i) {
    w[i - 1] = static_cast<Letter>(value % n_);
    value /= n_;
  }
  return w;
}

SubwordSet::SubwordSet(std::shared_ptr<const WordIndex> index)
    : index_(std::move(index)), bits_((index_->size() + 63) / 64, 0) {}

SubwordSet SubwordSet::epsilon(std::size_t alphabet_size, std::size_t k) {
  SubwordSet s(WordIndex::get(alphabet_size, k));
  s.insert(0);
  return s;
}

SubwordSet SubwordSet::full(std::size_t alphabet_size, std::size_t k) {
  SubwordSet s(WordIndex::get(alphabet_size, k));
  for (std::size_t i = 0; i < s.index_->size(); ++i) s.insert(i);
  return s;
}

std::size_t SubwordSet::size() const {
  std::size_t n = 0;
  for (auto b : bits_) n += static_cast<std::size_t>(std::popcount(b));
  return n;
}

bool SubwordSet::contains(std::span<const Letter> w) const {
  for (Letter a : w)
    if (a >= alphabet_size()) return false;
  const std::size_t idx = index_->index(w);
  return idx != WordIndex::npos && contains_index(idx);
}

bool SubwordSet::is_full() const { return size() == index_->size(); }

std::vector<Word> SubwordSet::members() const {
  std::vector<Word> out;
  for (std::size_t i = 0; i < index_->size(); ++i)
    if (contains_index(i)) out.push_back(index_->word(i));
  return out;
}

std::vector<Word> SubwordSet::complement() const {
  std::vector<Word> out;
  for (std::size_t i = 0; i < index_->size(); ++i)
    if (!contains_index(i)) out.push_back(index_->word(i));
  return out;
}

std::vector<Word> SubwordSet::maximal_members() const {
  // In a subword-closed set, u is maximal iff no one-letter insertion is a member.
  std::vector<Word> out;
  for (Word u : members()) {
    bool maximal = true;
    if (u.size() < k()) {
      for (std::size_t pos = 0; pos <= u.size() && maximal; ++pos) {
        for (Letter a = 0; a < alphabet_size() && maximal; ++a) {
          Word v = u;
          v.insert(v.begin() + static_cast<std::ptrdiff_t>(pos), a);
          if (contains(v)) maximal = false;
        }
      }
    }
    if (maximal) out.push_back(std::move(u));
  }
  return out;
}

std::vector<Word> SubwordSet::minimal_non_members() const {
  // u is a minimal non-member iff every one-letter deletion is a member.
  std::vector<Word> out;
  for (Word u : complement()) {
    bool minimal = true;
    for (std::size_t pos = 0; pos < u.size() && minimal; ++pos) {
      Word v = u;
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(pos));
      if (!contains(v)) minimal = false;
    }
    if (minimal) out.push_back(std::move(u));
  }
  return out;
}

std::string SubwordSet::serialize(const std::vector<std::string>& letter_names) const {
  std::string out;
  for (const Word& w : members()) {
    if (w.empty()) {
      out += '-';
    } else {
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += letter_names.at(w[i]);
      }
    }
    out += '\n';
  }
  return out;
}

std::size_t SubwordSetHash::operator()(const SubwordSet& s) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ s.k();
  for (auto b : s.bits()) {
    h ^= b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

SubwordSet class_successor(const SubwordSet& s, Letter a) {
  if (a >= s.alphabet_size()) throw InputError("letter outside the alphabet of the class");
  SubwordSet next = s;
  const auto& index = *s.index_;
  for (std::size_t block = 0; block < s.bits_.size(); ++block) {
    std::uint64_t word = s.bits_[block];
    while (word) {
      const std::size_t idx = block * 64 + static_cast<std::size_t>(std::countr_zero(word));
      word &= word - 1;
      const std::size_t ext = index.append(idx, a);
      if (ext != WordIndex::npos) next.insert(ext);
    }
  }
  return next;
}

SubwordSet subwords_up_to_k(std::span<const Letter> w, std::size_t k, std::size_t alphabet_size) {
  SubwordSet s = SubwordSet::epsilon(alphabet_size, k);
  for (Letter a : w) s = class_successor(s, a);
  return s;
}

namespace {

std::size_t implied_alphabet(std::span<const Letter> w1, std::span<const Letter> w2 = {}) {
  Letter top = 0;
  for (Letter a : w1) top = std::max(top, a);
  for (Letter a : w2) top = std::max(top, a);
  return static_cast<std::size_t>(top) + 1;
}

}  // namespace

bool k_equivalent(std::span<const Letter> w1, std::span<const Letter> w2, std::size_t k) {
  const std::size_t n = implied_alphabet(w1, w2);
  return subwords_up_to_k(w1, k, n) == subwords_up_to_k(w2, k, n);
}

Word reduce_word(std::span<const Letter> w, std::size_t k) {
  SubwordSet s = SubwordSet::epsilon(implied_alphabet(w), k);
  Word out;
  for (Letter a : w) {
    SubwordSet next = class_successor(s, a);
    if (next == s) continue;
    s = std::move(next);
    out.push_back(a);
  }
  return out;
}

CanonicalDfa build_canonical_dfa(const std::vector<std::string>& alphabet, std::size_t k,
                                 std::size_t budget) {
  if (alphabet.empty()) throw InputError("canonical automaton needs a nonempty alphabet");
  const std::size_t n = alphabet.size();
  CanonicalDfa out{Automaton(alphabet), {}};
  std::unordered_map<SubwordSet, StateId, SubwordSetHash> ids;
  std::vector<Word> access;

  auto name_of = [&](const Word& w) {
    std::string s = "[";
    if (w.empty()) s += '-';
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += '.';
      s += alphabet[w[i]];
    }
    return s + "]";
  };
  auto intern = [&](SubwordSet cls, const Word& w) {
    auto it = ids.find(cls);
    if (it != ids.end()) return it->second;
    if (out.classes.size() >= budget) {
      throw BudgetExceeded("too many ~k classes", budget, out.classes.size() + 1);
    }
    const StateId id = out.automaton.add_state(name_of(w));
    ids.emplace(cls, id);
    out.classes.push_back(std::move(cls));
    access.push_back(w);
    return id;
  };

  out.automaton.set_initial(intern(SubwordSet::epsilon(n, k), {}));
  for (StateId q = 0; q < out.classes.size(); ++q) {
    for (Letter a = 0; a < n; ++a) {
      Word w = access[q];
      w.push_back(a);
      const StateId r = intern(class_successor(out.classes[q], a), w);
      out.automaton.add_transition(q, a, r);
    }
  }
  return out;
}

Automaton canonical_automaton(const std::vector<std::string>& alphabet, std::size_t k,
                              std::size_t budget) {
  return build_canonical_dfa(alphabet, k, budget).automaton;
}

}  // namespace ptk
