#include "ssfractal/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "ssfractal/errors.hpp"
#include "src/format_util.hpp"

namespace ssf {

ExtendedQ ExtendedQ::from_double(double v) {
  if (std::isinf(v)) return v > 0 ? pos_inf() : neg_inf();
  if (std::isnan(v)) fail(ErrorCode::InvalidArgument, "q must not be NaN");
  return finite(v);
}

std::optional<ExtendedQ> ExtendedQ::parse(const std::string& token) {
  if (token == "-inf") return neg_inf();
  if (token == "+inf" || token == "inf") return pos_inf();
  if (token.empty()) return std::nullopt;
  char* end = nullptr;
  double v = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size()) return std::nullopt;
  if (!std::isfinite(v)) return std::nullopt;
  return finite(v);
}

double ExtendedQ::as_double() const {
  switch (kind) {
    case Kind::NegInf: return -HUGE_VAL;
    case Kind::PosInf: return HUGE_VAL;
    case Kind::Finite: return value;
  }
  return value;
}

std::string ExtendedQ::to_string() const {
  switch (kind) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    case Kind::Finite: return detail::fmt_real(value);
  }
  return "";
}

bool ExtendedQ::operator==(const ExtendedQ& o) const {
  if (kind != o.kind) return false;
  return kind != Kind::Finite || value == o.value;
}

bool ExtendedQ::operator<(const ExtendedQ& o) const {
  auto rank = [](Kind k) { return k == Kind::NegInf ? 0 : k == Kind::Finite ? 1 : 2; };
  if (kind != o.kind) return rank(kind) < rank(o.kind);
  return kind == Kind::Finite && value < o.value;
}

namespace {

void check_nondegenerate(const MultiplicityVector& mv) {
  if (mv.modulus() < 2)
    fail(ErrorCode::DegenerateModulus,
         "dimensions need modulus >= 2, got " + std::to_string(mv.modulus()));
}

// log of sum over support of m_c^q, via log-sum-exp of q * ln(m_c).
double log_moment(const MultiplicityVector& mv, double q) {
  double peak = -HUGE_VAL;
  mv.for_each_support([&](uint64_t c) {
    double t = q * mv.log_count(c);
    if (t > peak) peak = t;
  });
  long double acc = 0.0L;
  mv.for_each_support([&](uint64_t c) {
    acc += expl((long double)(q * mv.log_count(c) - peak));
  });
  return peak + double(logl(acc));
}

}  // namespace

double dimension_q(const MultiplicityVector& mv, double q) {
  check_nondegenerate(mv);
  if (!std::isfinite(q))
    fail(ErrorCode::InvalidArgument, "q must be finite here; the infinite "
                                     "limits have their own entry point");
  if (q == 1.0)
    fail(ErrorCode::InvalidArgument, "q = 1 is the entropy limit; use the "
                                     "information dimension entry point");
  double ln_modulus = std::log(double(mv.modulus()));
  double ln_total = double(mv.s()) * M_LN2;
  double moment = log_moment(mv, q) - q * ln_total;  // log sum P_c^q
  return (moment / ln_modulus) / (1.0 - q);
}

double dimension_info(const MultiplicityVector& mv) {
  check_nondegenerate(mv);
  double ln_modulus = std::log(double(mv.modulus()));
  double ln_total = double(mv.s()) * M_LN2;
  long double entropy = 0.0L;
  mv.for_each_support([&](uint64_t c) {
    double lp = mv.log_count(c) - ln_total;  // ln P_c <= 0
    entropy -= (long double)lp * expl((long double)lp);
  });
  return double(entropy) / ln_modulus;
}

std::pair<double, double> dimension_extremes(const MultiplicityVector& mv) {
  check_nondegenerate(mv);
  double ln_modulus = std::log(double(mv.modulus()));
  double ln_total = double(mv.s()) * M_LN2;
  BigInt lo = mv.min_support_count();
  BigInt hi = mv.max_count();
  double d_neg = (ln_total - (lo == 1 ? 0.0 : log_big(lo))) / ln_modulus;
  double d_pos = (ln_total - (hi == 1 ? 0.0 : log_big(hi))) / ln_modulus;
  return {d_neg, d_pos};
}

Spectrum spectrum(const MultiplicityVector& mv, std::vector<ExtendedQ> grid) {
  check_nondegenerate(mv);
  if (grid.empty()) fail(ErrorCode::InvalidArgument, "the q grid is empty");
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  Spectrum sp;
  sp.modulus = mv.modulus();
  sp.s = mv.s();
  auto [d_neg, d_pos] = dimension_extremes(mv);
  sp.d_neg_inf = d_neg;
  sp.d_pos_inf = d_pos;
  sp.points.reserve(grid.size());
  for (const ExtendedQ& q : grid) {
    double v;
    switch (q.kind) {
      case ExtendedQ::Kind::NegInf: v = d_neg; break;
      case ExtendedQ::Kind::PosInf: v = d_pos; break;
      case ExtendedQ::Kind::Finite:
        v = std::abs(q.value - 1.0) <= 1e-9 ? dimension_info(mv)
                                            : dimension_q(mv, q.value);
        break;
      default: v = 0.0;
    }
    sp.points.push_back({q, v});
  }
  // The spectrum is nonincreasing in q; anything else signals a numerical
  // defect upstream.
  for (size_t i = 1; i < sp.points.size(); ++i) {
    if (sp.points[i].value > sp.points[i - 1].value + 1e-9)
      fail(ErrorCode::InvalidArgument,
           "spectrum is not nonincreasing at q = " +
               sp.points[i].q.to_string());
  }
  return sp;
}

std::vector<SingularityEntry> singularity_strengths(const MultiplicityVector& mv) {
  check_nondegenerate(mv);
  double ln_modulus = std::log(double(mv.modulus()));
  double ln_total = double(mv.s()) * M_LN2;
  MultiplicityHistogram hist = multiplicity_histogram(mv);
  std::vector<SingularityEntry> out;
  out.reserve(hist.entries.size());
  for (const auto& e : hist.entries) {
    double alpha = (ln_total - (e.l == 1 ? 0.0 : log_big(e.l))) / ln_modulus;
    out.push_back({e.l, alpha, e.count});
  }
  return out;
}

double nonmodular_density(const Instance& inst) {
  unsigned __int128 product =
      (unsigned __int128)inst.size() * inst.max_weight();
  if (product <= 1)
    fail(ErrorCode::DegenerateDenominator,
         "s * max weight must exceed 1 for the nonmodular density");
  double denom = std::log2(double(inst.size()) * double(inst.max_weight()));
  return double(inst.size()) / denom;
}

const char* estimate_method_name(EstimateMethod m) {
  switch (m) {
    case EstimateMethod::LastSample: return "last-sample";
    case EstimateMethod::ExtrapolateInverseS: return "linear-extrapolation-in-1/s";
  }
  return "unknown";
}

namespace {

double dimension_at(const MultiplicityVector& mv, const ExtendedQ& q) {
  switch (q.kind) {
    case ExtendedQ::Kind::NegInf: return dimension_extremes(mv).first;
    case ExtendedQ::Kind::PosInf: return dimension_extremes(mv).second;
    case ExtendedQ::Kind::Finite:
      return std::abs(q.value - 1.0) <= 1e-9 ? dimension_info(mv)
                                             : dimension_q(mv, q.value);
  }
  return 0.0;
}

}  // namespace

FamilyDimensionEstimate family_dimension(const InstanceFamily& family,
                                         ExtendedQ q, EstimateMethod method,
                                         const Caps& caps) {
  FamilyDimensionEstimate est;
  est.q = q;
  est.method = method;
  for (size_t i = 0; i < family.members().size(); ++i) {
    const Instance& inst = family.members()[i];
    try {
      MultiplicityVector mv = multiplicity_dp(inst, caps);
      est.samples.emplace_back(unsigned(inst.size()), dimension_at(mv, q));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ModulusTooLarge ||
          e.code() == ErrorCode::InstanceTooLarge) {
        est.warnings.push_back("member " + std::to_string(i) + " (s = " +
                               std::to_string(inst.size()) +
                               ") skipped: " + e.what());
        continue;
      }
      throw;
    }
  }
  if (est.samples.size() < 2)
    fail(ErrorCode::InvalidArgument,
         "need at least two family members computable under the caps, got " +
             std::to_string(est.samples.size()));

  if (method == EstimateMethod::LastSample) {
    est.estimate = est.samples.back().second;
    return est;
  }

  // Least-squares fit of D ~ b0 + b1/s; the estimate is the intercept b0,
  // i.e. the extrapolation to s = infinity.
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  size_t n = est.samples.size();
  for (const auto& [s, d] : est.samples) {
    long double x = 1.0L / (long double)s;
    sx += x;
    sy += d;
    sxx += x * x;
    sxy += x * (long double)d;
  }
  long double det = (long double)n * sxx - sx * sx;
  if (det <= 0)
    fail(ErrorCode::InvalidArgument,
         "family sizes leave the 1/s fit degenerate");
  long double b1 = ((long double)n * sxy - sx * sy) / det;
  long double b0 = (sy - b1 * sx) / (long double)n;
  est.estimate = double(b0);
  est.residuals.reserve(n);
  for (const auto& [s, d] : est.samples)
    est.residuals.push_back(double((long double)d - (b0 + b1 / (long double)s)));
  return est;
}

std::string spectrum_to_csv(const Spectrum& sp) {
  std::string out = "q,D_q\n";
  for (const SpectrumPoint& p : sp.points) {
    out += p.q.to_string();
    out += ',';
    out += detail::fmt_real(p.value);
    out += '\n';
  }
  return out;
}

std::string spectrum_to_json(const Spectrum& sp) {
  std::string out = "{\"modulus\":" + std::to_string(sp.modulus) +
                    ",\"s\":" + std::to_string(sp.s) +
                    ",\"d_neg_inf\":" + detail::fmt_real(sp.d_neg_inf) +
                    ",\"d_pos_inf\":" + detail::fmt_real(sp.d_pos_inf) +
                    ",\"points\":[";
  for (size_t i = 0; i < sp.points.size(); ++i) {
    if (i) out += ',';
    const SpectrumPoint& p = sp.points[i];
    out += "{\"q\":";
    if (p.q.is_finite()) out += detail::fmt_real(p.q.value);
    else out += '"' + p.q.to_string() + '"';
    out += ",\"D_q\":" + detail::fmt_real(p.value) + "}";
  }
  out += "]}\n";
  return out;
}

std::string singularity_to_csv(const std::vector<SingularityEntry>& entries) {
  std::string out = "l,alpha,N_l\n";
  for (const SingularityEntry& e : entries) {
    out += to_decimal(e.l);
    out += ',';
    out += detail::fmt_real(e.alpha);
    out += ',';
    out += std::to_string(e.count);
    out += '\n';
  }
  return out;
}

std::string singularity_to_json(const std::vector<SingularityEntry>& entries) {
  std::string out = "{\"entries\":[";
  for (size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += "{\"l\":" + to_decimal(entries[i].l) +
           ",\"alpha\":" + detail::fmt_real(entries[i].alpha) +
           ",\"N_l\":" + std::to_string(entries[i].count) + "}";
  }
  out += "]}\n";
  return out;
}

std::string family_to_csv(const FamilyDimensionEstimate& est) {
  std::string out = "s,q,D_q\n";
  for (const auto& [s, d] : est.samples) {
    out += std::to_string(s);
    out += ',';
    out += est.q.to_string();
    out += ',';
    out += detail::fmt_real(d);
    out += '\n';
  }
  return out;
}

std::string family_to_json(const FamilyDimensionEstimate& est) {
  std::string out = "{\"q\":";
  if (est.q.is_finite()) out += detail::fmt_real(est.q.value);
  else out += '"' + est.q.to_string() + '"';
  out += ",\"method\":\"";
  out += estimate_method_name(est.method);
  out += "\",\"estimate\":" + detail::fmt_real(est.estimate) + ",\"samples\":[";
  for (size_t i = 0; i < est.samples.size(); ++i) {
    if (i) out += ',';
    out += "[" + std::to_string(est.samples[i].first) + "," +
           detail::fmt_real(est.samples[i].second) + "]";
  }
  out += "]";
  if (!est.residuals.empty()) {
    out += ",\"residuals\":[";
    for (size_t i = 0; i < est.residuals.size(); ++i) {
      if (i) out += ',';
      out += detail::fmt_real(est.residuals[i]);
    }
    out += "]";
  }
  if (!est.warnings.empty()) {
    out += ",\"warnings\":[";
    for (size_t i = 0; i < est.warnings.size(); ++i) {
      if (i) out += ',';
      out += '"' + detail::json_escape(est.warnings[i]) + '"';
    }
    out += "]";
  }
  out += "}\n";
  return out;
}

}  // namespace ssf
