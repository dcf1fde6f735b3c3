#pragma once

#include <string>
#include <vector>

#include "coxforge/errors.hpp"

namespace coxforge {

/// Permutation of {1..n}; image(i) is the image of i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity
  /// images[i-1] = image of i.
  static Permutation from_images(std::vector<int> images);
  /// Cycle notation over {1..n}: "id", "(12)", "(1 2 3)", "(5 4 3 2 1)(10 9 8 7 6)".
  /// Without spaces inside a cycle every digit is its own point.
  static Permutation parse(const std::string& text, int n);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const;
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long k) const;
  int order() const;
  /// Cycle decomposition, each cycle starting at its smallest point; fixed
  /// points omitted.
  std::vector<std::vector<int>> cycles() const;
  /// "id" or cycles; digits run together when n <= 9 ("(123)").
  std::string to_string() const;
  std::string to_string_spaced() const;

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

 private:
  std::vector<int> img_;
};

/// The six elements of S_3 in a fixed order: id, (12), (13), (23), (123), (132).
const std::vector<Permutation>& s3_elements();
/// Label as printed: "id", "(12)", ...
std::string s3_label(const Permutation& p);

}  // namespace coxforge
