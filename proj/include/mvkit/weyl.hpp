#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mvkit/rootsys.hpp"

namespace mvkit {

using Word = std::vector<int>;  // node indices, leftmost letter first

// A Weyl group element stored by its lexicographically least reduced word.
// key()[j] is the height of w^{-1} alpha_j; it determines w.
class WeylElt {
 public:
  WeylElt() = default;
  explicit WeylElt(DatumPtr d);  // identity
  static WeylElt from_word(DatumPtr d, const Word& word);
  static WeylElt simple(DatumPtr d, int i);

  const DatumPtr& datum() const { return d_; }
  const Word& word() const { return word_; }
  const std::vector<std::int64_t>& key() const { return key_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  RootVector act(const RootVector& x) const;
  Coweight act(const Coweight& theta) const;
  WeylElt inverse() const;
  WeylElt operator*(const WeylElt& o) const;
  WeylElt left_mul(int i) const;   // s_i w
  WeylElt right_mul(int i) const;  // w s_i

  bool left_descent(int i) const { return key_[i] < 0; }
  bool right_descent(int i) const;  // l(w s_i) < l(w)

  bool operator==(const WeylElt& o) const { return key_ == o.key_; }
  bool operator!=(const WeylElt& o) const { return key_ != o.key_; }
  bool operator<(const WeylElt& o) const { return word_ < o.word_; }

 private:
  static std::vector<std::int64_t> identity_key(int n);
  void canonicalize();

  DatumPtr d_;
  std::vector<std::int64_t> key_;
  Word word_;
};

// Word reduced iff its running inversion roots are positive.
bool is_reduced_word(const CartanDatum& d, const Word& word);

// N_w = {s_{i1}...s_{i(k-1)} alpha_{ik}} in word order.
std::vector<RootVector> inversion_set(const WeylElt& w);

bool is_J_reduced(const WeylElt& w, const std::vector<int>& J);

// Longest element of the parabolic subgroup W_J (W_J must be finite).
WeylElt longest_element(DatumPtr d, const std::vector<int>& J);
WeylElt longest_element(DatumPtr d);

struct WordMove {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t position = 0;
  std::string label;  // "commutation" or "braid"
};

struct ReducedWordGraph {
  std::vector<Word> words;  // sorted; words[0] is canonical
  std::vector<WordMove> moves;
};

inline constexpr std::size_t kReducedWordCap = 1000000;

ReducedWordGraph reduced_words(const WeylElt& w, std::size_t cap = kReducedWordCap);

// All elements of length <= L in order of (length, canonical word).
std::vector<WeylElt> elements_up_to(DatumPtr d, int L);

// All elements of the parabolic subgroup W_J (must be finite).
std::vector<WeylElt> parabolic_elements(DatumPtr d, const std::vector<int>& J, std::size_t cap = 100000);

std::string word_to_string(const CartanDatum& d, const Word& w);

}  // namespace mvkit
