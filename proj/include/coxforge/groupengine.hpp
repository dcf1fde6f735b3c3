#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxforge/certificate.hpp"
#include "coxforge/picard.hpp"

namespace coxforge {

/// Generator f_rho is the map built with line permutation tau = rho^{-1}; for
/// n = 5 this is the map the printed tables call f_sigma with sigma = rho.
struct Letter {
  Permutation rho{3};
  bool inverse = false;
  friend bool operator==(const Letter& a, const Letter& b) { return a.rho == b.rho && a.inverse == b.inverse; }
};
/// [a, b, c] is the composition a o b o c.
using GenWord = std::vector<Letter>;

/// Tokens "id", "(12)", ..., each optionally followed by "^-1"; separated by
/// spaces or '*'. The empty string and "1" are the empty word.
GenWord parse_word(const std::string& text);
std::string word_to_string(const GenWord& w);
GenWord inverse_word(const GenWord& w);

/// L_rho o f_id^k with L_rho = f_rho o f_id^{-1}.
struct NormalForm {
  Permutation rho{3};
  long power = 0;
  friend bool operator==(const NormalForm& a, const NormalForm& b) { return a.rho == b.rho && a.power == b.power; }
  friend bool operator<(const NormalForm& a, const NormalForm& b) {
    return a.power != b.power ? a.power < b.power : a.rho < b.rho;
  }
  std::string to_string() const;
};

struct GeneratorInfo {
  Permutation rho{3};
  Permutation tau{3};
  bool valid = false;
  OrbitData orbit;
  std::optional<QuadraticMap> map;
  std::optional<QuadraticMap> map_inverse;
  LatticeIsometry action;          // pullback f_rho^*
  LatticeIsometry action_inverse;  // (f_rho^{-1})^*
  RestrictionMap restriction;
  RestrictionMap restriction_inverse;
};

struct EnumerationResult {
  int max_len = 0;
  std::size_t states = 0;             // distinct (matrix, normal form) pairs reached
  std::size_t distinct_matrices = 0;
  std::size_t distinct_normal_forms = 0;
  bool sound = true;                  // every word's matrix equals the normal-form matrix
  bool injective = true;              // matrices and normal forms in bijection
  std::vector<std::size_t> words_per_length;  // 12^L style counts of words covered
};

struct DyndegResult {
  RationalInterval radius;
  long power = 0;
  RationalInterval expected;  // enclosure of delta^|power|
  bool agrees = false;
};

class GroupEngine {
 public:
  /// Builds and validates all six generators for n; invalid ones are kept
  /// with valid = false and may not appear in words.
  explicit GroupEngine(int n, std::uint64_t seed = 2022, int max_iter = kDefaultMaxIter);

  int n() const { return sol_.n; }
  const DillerSolution& solution() const { return sol_; }
  const std::vector<GeneratorInfo>& generators() const { return gens_; }
  const GeneratorInfo& generator(const Permutation& rho) const;
  bool all_valid() const;

  LatticeIsometry eval_lattice(const GenWord& w) const;
  /// Birational evaluation: the letters applied right to left to p.
  ProjPoint eval_point(const GenWord& w, const ProjPoint& p) const;
  /// count seeded random points of P^2 over the field.
  std::vector<ProjPoint> sample_points(int count) const;

  /// Lattice action of L_rho.
  LatticeIsometry linear_action(const Permutation& rho) const;

  Certificate verify_dihedral() const;
  Certificate verify_commutation() const;

  NormalForm normal_form(const GenWord& w) const;
  LatticeIsometry eval_normal_form(const NormalForm& nf) const;
  EnumerationResult enumerate(int max_len) const;

  NFElem word_determinant(const GenWord& w) const;
  RestrictionMap word_restriction(const GenWord& w) const;
  DyndegResult word_dyndeg(const GenWord& w, const Rational& eps) const;

  /// Closure of the L_rho matrices under composition.
  std::vector<LatticeIsometry> linear_group() const;

 private:
  const GeneratorInfo& letter_info(const Letter& l) const;
  NormalForm append(const NormalForm& nf, const Letter& l) const;
  int l_index(const LatticeIsometry& m) const;  // index into s3_elements, -1 if none
  DillerSolution sol_;
  std::uint64_t seed_;
  std::vector<GeneratorInfo> gens_;
  std::vector<LatticeIsometry> l_mats_;
};

struct ClassifyResult {
  int n = 0;
  std::string label;            // "D3 ⋊ Z", "Z/3Z ⋊ Z", "(Z/2Z)^2 ⋊ Z", "Z" or "Unmatched"
  std::string reference_label;  // the tabulated expectation for n
  bool matches_reference = false;
  std::vector<std::string> valid_generators;
  std::vector<std::string> invalid_generators;
  int linear_group_order = 0;
  bool linear_group_abelian = false;
  std::string line_permutation_group;  // "S3", "A3", "order 2", "trivial"
  Certificate relations;
  EnumerationResult enumeration;
  std::vector<std::string> evidence;
};

/// Expected label for the n-th family (parity and divisibility by 3).
std::string reference_label(int n);
ClassifyResult classify_subgroup(int n, int max_len, std::uint64_t seed = 2022, int max_iter = kDefaultMaxIter);

}  // namespace coxforge
