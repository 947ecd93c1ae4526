#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssfractal/bigint.hpp"
#include "ssfractal/caps.hpp"
#include "ssfractal/instance.hpp"
#include "ssfractal/multiplicity.hpp"

namespace ssf {

// A point on the extended real line: finite, +infinity or -infinity.
struct ExtendedQ {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  double value = 0.0;

  static ExtendedQ neg_inf() { return {Kind::NegInf, 0.0}; }
  static ExtendedQ pos_inf() { return {Kind::PosInf, 0.0}; }
  static ExtendedQ finite(double v) { return {Kind::Finite, v}; }
  static ExtendedQ from_double(double v);  // maps IEEE infinities
  static std::optional<ExtendedQ> parse(const std::string& token);

  bool is_finite() const { return kind == Kind::Finite; }
  double as_double() const;  // IEEE +-infinity for the infinite kinds
  std::string to_string() const;  // "-inf", "+inf" or a decimal

  bool operator==(const ExtendedQ& o) const;
  bool operator<(const ExtendedQ& o) const;
};

// Generalized fractal dimension D_q of the multiplicity distribution for a
// finite order q != 1:  D_q = (1/(1-q)) * log(sum over support of P_c^q) /
// log A where P_c = m_c / 2^s.  Evaluated in the log domain.
double dimension_q(const MultiplicityVector& mv, double q);

// The q -> 1 limit: Shannon entropy of the multiplicity distribution over
// log A.
double dimension_info(const MultiplicityVector& mv);

// The q -> -infinity and q -> +infinity limits, driven by the smallest and
// largest multiplicity on the support.  Returned as (D_neg_inf, D_pos_inf).
std::pair<double, double> dimension_extremes(const MultiplicityVector& mv);

struct SpectrumPoint {
  ExtendedQ q;
  double value = 0.0;
};

struct Spectrum {
  uint64_t modulus = 0;
  unsigned s = 0;
  double d_neg_inf = 0.0;
  double d_pos_inf = 0.0;
  std::vector<SpectrumPoint> points;  // ascending in q
};

// Evaluates D_q on a grid of extended reals.  Grid values within 1e-9 of 1
// are snapped to the entropy limit; duplicates are merged; the grid is
// sorted.  The result always carries both infinite limits.
Spectrum spectrum(const MultiplicityVector& mv, std::vector<ExtendedQ> grid);

// Singularity strengths: for each multiplicity value l present, the exponent
// alpha_l with l = 2^s * A^(-alpha_l), together with the number of residues
// N_l attaining it.  Sorted by increasing l (so alpha strictly decreasing).
struct SingularityEntry {
  BigInt l;
  double alpha = 0.0;
  uint64_t count = 0;
};

std::vector<SingularityEntry> singularity_strengths(const MultiplicityVector& mv);

// Density against the unreduced sum range: s / log2(s * max weight).
double nonmodular_density(const Instance& inst);

enum class EstimateMethod { LastSample, ExtrapolateInverseS };

const char* estimate_method_name(EstimateMethod m);

// D_q sampled across a family of growing instances, plus a scalar estimate
// of the s -> infinity limit.  Members that exceed the caps are skipped and
// reported in warnings; at least two members must be computable.
struct FamilyDimensionEstimate {
  ExtendedQ q;
  EstimateMethod method = EstimateMethod::LastSample;
  std::vector<std::pair<unsigned, double>> samples;  // (s, D_q)
  double estimate = 0.0;
  std::vector<double> residuals;  // per-sample fit residuals (extrapolation only)
  std::vector<std::string> warnings;
};

FamilyDimensionEstimate family_dimension(const InstanceFamily& family,
                                         ExtendedQ q, EstimateMethod method,
                                         const Caps& caps = Caps{});

std::string spectrum_to_csv(const Spectrum& sp);
std::string spectrum_to_json(const Spectrum& sp);
std::string singularity_to_csv(const std::vector<SingularityEntry>& entries);
std::string singularity_to_json(const std::vector<SingularityEntry>& entries);
std::string family_to_csv(const FamilyDimensionEstimate& est);
std::string family_to_json(const FamilyDimensionEstimate& est);

}  // namespace ssf
