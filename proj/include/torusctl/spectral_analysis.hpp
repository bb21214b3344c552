#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torusctl/symbols.hpp"

namespace torusctl {

/// Two eigenvalues are considered equal iff |a - b| <= 1e-9 * max(1, |a|).
/// Exact for integer-valued symbols; guards floating-point noise otherwise.
bool lambda_equal(double a, double b);

/// One eigenvalue class I(k') restricted to the lattice box.
struct MultiplicityClass {
  ModeIndex representative;        // lexicographically smallest member
  double lambda = 0.0;
  std::vector<ModeIndex> members;  // lexicographic order

  int multiplicity() const { return static_cast<int>(members.size()); }
};

/// Partition of the box by eigenvalue, classes sorted by lambda ascending.
/// The representatives form the truncated maximal set (J or I of the
/// synthesis), with pairwise distinct eigenvalues.
struct MultiplicityReport {
  int radius = 0;
  std::vector<MultiplicityClass> classes;

  /// Index of the class holding this eigenvalue, or -1 if absent.
  int index_of(double lambda) const;

  std::vector<double> lambdas() const;
  std::vector<ModeIndex> representatives() const;
};

MultiplicityReport multiplicity_classes(const EigenvalueTable& table);

struct HypothesisReport {
  bool holds = false;
  std::optional<ModeIndex> counterexample;
  std::string detail;  // which clause failed, human readable
};

/// Brute-force certification of (H2) on the lattice box: lambda even in k1,
/// odd in k2, with the in-box uniqueness clauses
///   {j2 : lambda(k1,j2) = lambda(k1,k2)} = {k2}        (k1 != 0)
///   {j1 : lambda(j1,k2) = lambda(k1,k2)} = {+-k1}      (k2 != 0).
HypothesisReport verify_h2(const EigenvalueTable& table);

/// Mirrored certification of (H3): lambda odd in k1, even in k2, with
///   {j2} = {+-k2} (k1 != 0) and {j1} = {k1} (k2 != 0).
HypothesisReport verify_h3(const EigenvalueTable& table);

struct GapReport {
  double gamma = 0.0;                // min over distinct representative pairs
  double gamma_prime_lattice = 0.0;  // same, after removing the exclusion set
  std::optional<double> analytic_gamma_prime;
  std::pair<ModeIndex, ModeIndex> min_pair;
  std::string note;
};

/// Gap statistics over the representatives. gamma_prime_lattice is a
/// lattice-box quantity under a user-chosen finite exclusion set; the true
/// gamma' (a sup over all finite exclusions) is not computable from finite
/// data, so the analytic value is attached separately when known.
GapReport gap_statistics(const MultiplicityReport& report,
                         const std::vector<ModeIndex>& exclusion,
                         std::optional<double> analytic_gamma_prime = std::nullopt);

}  // namespace torusctl
