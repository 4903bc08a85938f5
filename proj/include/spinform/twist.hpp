#pragma once

#include <string>
#include <vector>

#include "spinform/errors.hpp"

namespace spinform {

// One signed Dehn-twist generator.
struct TwistLetter {
  std::string curve;
  int exponent = 1;  // +1 or -1

  bool operator==(const TwistLetter&) const = default;
};

// Word in Dehn-twist generators over a named curve catalog. The leftmost
// letter acts last (functional composition).
struct TwistWord {
  std::vector<TwistLetter> letters;
  std::string catalog;

  TwistWord() = default;
  explicit TwistWord(std::vector<TwistLetter> l, std::string cat = {})
      : letters(std::move(l)), catalog(std::move(cat)) {}

  bool empty() const { return letters.empty(); }
  size_t size() const { return letters.size(); }

  TwistWord inverse() const {
    TwistWord w;
    w.catalog = catalog;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      w.letters.push_back({it->curve, -it->exponent});
    return w;
  }

  TwistWord& append(const std::string& curve, int exponent) {
    if (exponent == 0) throw InvalidInputError("twist letter exponent must be nonzero");
    const int step = exponent > 0 ? 1 : -1;
    for (int k = 0; k != exponent; k += step) letters.push_back({curve, step});
    return *this;
  }

  TwistWord& operator+=(const TwistWord& o) {
    letters.insert(letters.end(), o.letters.begin(), o.letters.end());
    return *this;
  }

  friend TwistWord operator+(TwistWord a, const TwistWord& b) { return a += b; }

  bool operator==(const TwistWord& o) const { return letters == o.letters; }

  std::string to_string() const {
    std::string s;
    for (const auto& l : letters) {
      if (!s.empty()) s += ' ';
      s += l.curve;
      if (l.exponent < 0) s += "'";
    }
    return s;
  }
};

}  // namespace spinform
