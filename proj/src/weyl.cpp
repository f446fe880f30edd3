#include "mvkit/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

namespace mvkit {

namespace {

void left_apply(const CartanDatum& d, std::vector<std::int64_t>& k, int i) {
  const std::int64_t ki = k[i];
  for (int j = 0; j < d.rank(); ++j)
    if (d.cartan[i][j] != 0) k[j] -= d.cartan[i][j] * ki;
}

}  // namespace

std::vector<std::int64_t> WeylElt::identity_key(int n) { return std::vector<std::int64_t>(n, 1); }

WeylElt::WeylElt(DatumPtr d) : d_(std::move(d)) { key_ = identity_key(d_->rank()); }

WeylElt WeylElt::from_word(DatumPtr d, const Word& word) {
  WeylElt w(std::move(d));
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= w.d_->rank()) throw Error("word letter out of range", ErrorKind::usage);
    left_apply(*w.d_, w.key_, *it);
  }
  w.canonicalize();
  return w;
}

WeylElt WeylElt::simple(DatumPtr d, int i) { return from_word(std::move(d), {i}); }

void WeylElt::canonicalize() {
  word_.clear();
  auto k = key_;
  const int n = d_->rank();
  for (;;) {
    int i = 0;
    while (i < n && k[i] >= 0) ++i;
    if (i == n) break;
    word_.push_back(i);
    left_apply(*d_, k, i);
  }
}

RootVector WeylElt::act(const RootVector& x) const {
  RootVector r(x);
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) r = reflect_root(*d_, *it, r);
  return r;
}

Coweight WeylElt::act(const Coweight& theta) const {
  Coweight r(theta);
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) r = reflect_coweight(*d_, *it, r);
  return r;
}

WeylElt WeylElt::inverse() const {
  Word rev(word_.rbegin(), word_.rend());
  return from_word(d_, rev);
}

WeylElt WeylElt::operator*(const WeylElt& o) const {
  WeylElt r(o);
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) left_apply(*d_, r.key_, *it);
  r.canonicalize();
  return r;
}

WeylElt WeylElt::left_mul(int i) const {
  WeylElt r(*this);
  left_apply(*d_, r.key_, i);
  r.canonicalize();
  return r;
}

WeylElt WeylElt::right_mul(int i) const { return *this * simple(d_, i); }

bool WeylElt::right_descent(int i) const {
  RootVector a = act(unit_vector(d_->rank(), i));
  for (auto x : a)
    if (x != 0) return x < 0;
  return false;
}

bool is_reduced_word(const CartanDatum& d, const Word& word) {
  // s_{i1}..s_{i(k-1)} alpha_{ik} must be positive for every k
  const int n = d.rank();
  for (std::size_t k = 0; k < word.size(); ++k) {
    RootVector r = unit_vector(n, word[k]);
    for (std::size_t t = k; t-- > 0;) r = reflect_root(d, word[t], r);
    for (auto x : r)
      if (x < 0) return false;
  }
  return true;
}

std::vector<RootVector> inversion_set(const WeylElt& w) {
  const CartanDatum& d = *w.datum();
  const Word& word = w.word();
  std::vector<RootVector> out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    RootVector r = unit_vector(d.rank(), word[k]);
    for (std::size_t t = k; t-- > 0;) r = reflect_root(d, word[t], r);
    out.push_back(r);
  }
  return out;
}

bool is_J_reduced(const WeylElt& w, const std::vector<int>& J) {
  for (int j : J)
    if (w.right_descent(j)) return false;
  return true;
}

WeylElt longest_element(DatumPtr d, const std::vector<int>& J) {
  WeylElt w(d);
  const std::size_t guard = 100000;
  for (std::size_t step = 0;; ++step) {
    if (step > guard) throw Error("longest_element: parabolic subgroup is not finite");
    bool grew = false;
    for (int j : J) {
      if (!w.left_descent(j)) {
        w = w.left_mul(j);
        grew = true;
        break;
      }
    }
    if (!grew) return w;
  }
}

WeylElt longest_element(DatumPtr d) {
  if (d->kind != Kind::finite) throw Error("longest element exists only in finite type");
  std::vector<int> all(d->rank());
  for (int i = 0; i < d->rank(); ++i) all[i] = i;
  return longest_element(d, all);
}

ReducedWordGraph reduced_words(const WeylElt& w, std::size_t cap) {
  const CartanDatum& d = *w.datum();
  ReducedWordGraph g;
  std::map<Word, std::size_t> index;
  std::deque<Word> queue;
  std::vector<std::tuple<Word, Word, std::size_t, std::string>> raw;
  index[w.word()] = 0;
  queue.push_back(w.word());
  while (!queue.empty()) {
    Word cur = queue.front();
    queue.pop_front();
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      int i = cur[p], j = cur[p + 1];
      if (i == j) continue;
      int a = d.cartan[i][j];
      Word nxt;
      std::string label;
      if (a == 0) {
        nxt = cur;
        std::swap(nxt[p], nxt[p + 1]);
        label = "commutation";
      } else if (a == -1 && p + 2 < cur.size() && cur[p + 2] == i) {
        nxt = cur;
        nxt[p] = j;
        nxt[p + 1] = i;
        nxt[p + 2] = j;
        label = "braid";
      } else {
        continue;
      }
      raw.emplace_back(cur, nxt, p, label);
      if (!index.count(nxt)) {
        if (index.size() >= cap)
          throw Error("reduced_words: more than " + std::to_string(cap) + " reduced words");
        index[nxt] = index.size();
        queue.push_back(nxt);
      }
    }
  }
  for (auto& [word, idx] : index) g.words.push_back(word);
  std::map<Word, std::size_t> sorted;
  for (std::size_t k = 0; k < g.words.size(); ++k) sorted[g.words[k]] = k;
  for (auto& [a, b, p, label] : raw) g.moves.push_back({sorted[a], sorted[b], p, label});
  return g;
}

std::vector<WeylElt> elements_up_to(DatumPtr d, int L) {
  std::vector<WeylElt> out{WeylElt(d)};
  std::vector<WeylElt> layer = out;
  for (int l = 1; l <= L; ++l) {
    std::map<Word, WeylElt> next;
    for (const auto& w : layer)
      for (int i = 0; i < d->rank(); ++i)
        if (!w.left_descent(i)) {
          WeylElt u = w.left_mul(i);
          next.emplace(u.word(), u);
        }
    layer.clear();
    for (auto& [word, u] : next) layer.push_back(u);
    if (layer.empty()) break;
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<WeylElt> parabolic_elements(DatumPtr d, const std::vector<int>& J, std::size_t cap) {
  std::map<Word, WeylElt> seen;
  std::deque<WeylElt> queue{WeylElt(d)};
  seen.emplace(Word{}, WeylElt(d));
  while (!queue.empty()) {
    WeylElt w = queue.front();
    queue.pop_front();
    for (int j : J) {
      WeylElt u = w.left_mul(j);
      if (seen.count(u.word())) continue;
      if (seen.size() >= cap) throw Error("parabolic subgroup is too large");
      seen.emplace(u.word(), u);
      queue.push_back(u);
    }
  }
  std::vector<WeylElt> out;
  for (auto& [k, w] : seen) out.push_back(w);
  std::stable_sort(out.begin(), out.end(),
                   [](const WeylElt& a, const WeylElt& b) { return a.length() < b.length(); });
  return out;
}

std::string word_to_string(const CartanDatum& d, const Word& w) {
  std::string s = "[";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + d.labels[w[k]];
  return s + "]";
}

}  // namespace mvkit
