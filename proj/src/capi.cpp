#include "ssfractal.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "ssfractal/errors.hpp"
#include "ssfractal/hausdorff.hpp"
#include "ssfractal/instance.hpp"
#include "ssfractal/multiplicity.hpp"
#include "ssfractal/partition.hpp"
#include "ssfractal/spectrum.hpp"

using ssf::Error;
using ssf::ErrorCode;

struct ssf_instance {
  ssf::Instance v;
};
struct ssf_multiplicity {
  ssf::MultiplicityVector v;
};
struct ssf_collisions {
  std::vector<ssf::CollisionClass> v;
  std::vector<std::vector<std::string>> rendered;
};
struct ssf_spectrum {
  ssf::Spectrum v;
};
struct ssf_singularity {
  std::vector<ssf::SingularityEntry> v;
  std::vector<std::string> rendered;
};
struct ssf_family {
  ssf::InstanceFamily v;
};
struct ssf_family_estimate {
  ssf::FamilyDimensionEstimate v;
};
struct ssf_strings {
  std::vector<std::string> v;
};
struct ssf_lower_bound {
  ssf::LowerBoundReport v;
  std::string total_dec, rhs_dec;
};
struct ssf_pairs {
  std::vector<std::pair<std::string, std::string>> v;
};
struct ssf_image {
  ssf::ImageSet v;
};
struct ssf_components {
  ssf::ComponentDecomposition v;
};

namespace {

thread_local std::string g_last_error;

ssf_status map_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return SSF_ERR_INVALID_ARGUMENT;
    case ErrorCode::EmptyWeights: return SSF_ERR_EMPTY_WEIGHTS;
    case ErrorCode::WeightOutOfRange: return SSF_ERR_WEIGHT_OUT_OF_RANGE;
    case ErrorCode::DensityOverflow: return SSF_ERR_DENSITY_OVERFLOW;
    case ErrorCode::ParseError: return SSF_ERR_PARSE;
    case ErrorCode::ModulusTooLarge: return SSF_ERR_MODULUS_TOO_LARGE;
    case ErrorCode::InstanceTooLarge: return SSF_ERR_INSTANCE_TOO_LARGE;
    case ErrorCode::DegenerateModulus: return SSF_ERR_DEGENERATE_MODULUS;
    case ErrorCode::DegenerateDenominator: return SSF_ERR_DEGENERATE_DENOMINATOR;
    case ErrorCode::SolutionInstanceMismatch: return SSF_ERR_SOLUTION_INSTANCE_MISMATCH;
    case ErrorCode::NotACollision: return SSF_ERR_NOT_A_COLLISION;
    case ErrorCode::HypothesisViolated: return SSF_ERR_HYPOTHESIS_VIOLATED;
    case ErrorCode::SetsNotFree: return SSF_ERR_SETS_NOT_FREE;
    case ErrorCode::NotInjective: return SSF_ERR_NOT_INJECTIVE;
    case ErrorCode::Surjective: return SSF_ERR_SURJECTIVE;
    case ErrorCode::NoBoundaryGap: return SSF_ERR_NO_BOUNDARY_GAP;
    case ErrorCode::OutputTooLarge: return SSF_ERR_OUTPUT_TOO_LARGE;
    case ErrorCode::IoError: return SSF_ERR_IO;
  }
  return SSF_ERR_INTERNAL;
}

template <class F>
ssf_status guarded(F&& body) noexcept {
  try {
    body();
    return SSF_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SSF_ERR_NO_MEMORY;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SSF_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return SSF_ERR_INTERNAL;
  }
}

ssf_status arg_error(const char* msg) {
  g_last_error = msg;
  return SSF_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ssf::Caps to_caps(const ssf_caps* caps) {
  if (!caps) return ssf::Caps{};
  ssf::Caps out;
  out.brute_force = caps->brute_force;
  out.ternary = caps->ternary;
  out.modulus = caps->modulus;
  out.attractor_outputs = caps->attractor_outputs;
  return out;
}

std::vector<std::string> render_members(const ssf::CollisionClass& cls) {
  std::vector<std::string> out;
  out.reserve(cls.members.size());
  for (const auto& x : cls.members) {
    std::string str;
    str.reserve(x.size());
    for (uint8_t b : x) str += char('0' + b);
    out.push_back(std::move(str));
  }
  return out;
}

std::string bits_of(const std::vector<uint8_t>& x) {
  std::string str;
  str.reserve(x.size());
  for (uint8_t b : x) str += char('0' + b);
  return str;
}

std::vector<uint8_t> parse_bits(const char* text) {
  if (!text) ssf::fail(ErrorCode::InvalidArgument, "null vector string");
  std::vector<uint8_t> out;
  for (const char* p = text; *p; ++p) {
    if (*p != '0' && *p != '1')
      ssf::fail(ErrorCode::ParseError,
                std::string("invalid vector digit '") + *p + "'");
    out.push_back(uint8_t(*p - '0'));
  }
  return out;
}

}  // namespace

extern "C" {

const char* ssf_status_name(ssf_status status) {
  switch (status) {
    case SSF_OK: return "ok";
    case SSF_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case SSF_ERR_EMPTY_WEIGHTS: return "empty-weights";
    case SSF_ERR_WEIGHT_OUT_OF_RANGE: return "weight-out-of-range";
    case SSF_ERR_DENSITY_OVERFLOW: return "density-overflow";
    case SSF_ERR_PARSE: return "parse-error";
    case SSF_ERR_MODULUS_TOO_LARGE: return "modulus-too-large";
    case SSF_ERR_INSTANCE_TOO_LARGE: return "instance-too-large";
    case SSF_ERR_DEGENERATE_MODULUS: return "degenerate-modulus";
    case SSF_ERR_DEGENERATE_DENOMINATOR: return "degenerate-denominator";
    case SSF_ERR_SOLUTION_INSTANCE_MISMATCH: return "solution-instance-mismatch";
    case SSF_ERR_NOT_A_COLLISION: return "not-a-collision";
    case SSF_ERR_HYPOTHESIS_VIOLATED: return "hypothesis-violated";
    case SSF_ERR_SETS_NOT_FREE: return "sets-not-free";
    case SSF_ERR_NOT_INJECTIVE: return "not-injective";
    case SSF_ERR_SURJECTIVE: return "surjective";
    case SSF_ERR_NO_BOUNDARY_GAP: return "no-boundary-gap";
    case SSF_ERR_OUTPUT_TOO_LARGE: return "output-too-large";
    case SSF_ERR_IO: return "io-error";
    case SSF_ERR_NO_MEMORY: return "no-memory";
    case SSF_ERR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* ssf_last_error(void) { return g_last_error.c_str(); }

const char* ssf_version(void) { return "0.1.0"; }

void ssf_free_string(char* str) { std::free(str); }

void ssf_caps_defaults(ssf_caps* caps) {
  if (!caps) return;
  ssf::Caps d;
  caps->brute_force = d.brute_force;
  caps->ternary = d.ternary;
  caps->modulus = d.modulus;
  caps->attractor_outputs = d.attractor_outputs;
}

ssf_status ssf_caps_parse(const char* spec, ssf_caps* caps) {
  if (!spec || !caps) return arg_error("spec and caps must be non-null");
  return guarded([&] {
    ssf::Caps merged = ssf::parse_caps(spec, to_caps(caps));
    caps->brute_force = merged.brute_force;
    caps->ternary = merged.ternary;
    caps->modulus = merged.modulus;
    caps->attractor_outputs = merged.attractor_outputs;
  });
}

/* ---- instances ---- */

ssf_status ssf_instance_new(const uint64_t* weights, size_t count,
                            uint64_t modulus, ssf_instance** out) {
  if (!out || (!weights && count > 0))
    return arg_error("weights and out must be non-null");
  return guarded([&] {
    std::vector<uint64_t> w(weights, weights + count);
    *out = new ssf_instance{ssf::Instance(std::move(w), modulus)};
  });
}

ssf_status ssf_instance_arithmetic(uint64_t s, uint64_t a, ssf_instance** out) {
  if (!out) return arg_error("out must be non-null");
  return guarded([&] { *out = new ssf_instance{ssf::gen_arithmetic(s, a)}; });
}

ssf_status ssf_instance_random_density(uint64_t s, double rho, uint64_t seed,
                                       const ssf_caps* caps,
                                       ssf_instance** out) {
  if (!out) return arg_error("out must be non-null");
  return guarded([&] {
    *out = new ssf_instance{ssf::gen_random_density(s, rho, seed, to_caps(caps))};
  });
}

ssf_status ssf_instance_superincreasing(uint64_t s, uint64_t seed,
                                        const ssf_caps* caps,
                                        ssf_instance** out) {
  if (!out) return arg_error("out must be non-null");
  return guarded([&] {
    *out = new ssf_instance{ssf::gen_superincreasing(s, seed, to_caps(caps))};
  });
}

ssf_status ssf_instance_from_json(const char* text, ssf_instance** out) {
  if (!text || !out) return arg_error("text and out must be non-null");
  return guarded([&] {
    *out = new ssf_instance{ssf::instance_from_json(text)};
  });
}

ssf_status ssf_instance_load(const char* path, ssf_instance** out) {
  if (!path || !out) return arg_error("path and out must be non-null");
  return guarded([&] { *out = new ssf_instance{ssf::load_instance(path)}; });
}

ssf_status ssf_instance_save(const ssf_instance* inst, const char* path) {
  if (!inst || !path) return arg_error("inst and path must be non-null");
  return guarded([&] { ssf::save_instance(inst->v, path); });
}

ssf_status ssf_instance_json(const ssf_instance* inst, char** out) {
  if (!inst || !out) return arg_error("inst and out must be non-null");
  return guarded([&] { *out = dup_string(ssf::instance_to_json(inst->v)); });
}

void ssf_instance_free(ssf_instance* inst) { delete inst; }

uint64_t ssf_instance_s(const ssf_instance* inst) {
  return inst ? inst->v.size() : 0;
}

uint64_t ssf_instance_modulus(const ssf_instance* inst) {
  return inst ? inst->v.modulus() : 0;
}

uint64_t ssf_instance_weight(const ssf_instance* inst, size_t index) {
  if (!inst || index >= inst->v.size()) return 0;
  return inst->v.weight(index);
}

ssf_status ssf_instance_density(const ssf_instance* inst, double* out) {
  if (!inst || !out) return arg_error("inst and out must be non-null");
  return guarded([&] { *out = ssf::density(inst->v); });
}

ssf_status ssf_instance_nonmodular_density(const ssf_instance* inst,
                                           double* out) {
  if (!inst || !out) return arg_error("inst and out must be non-null");
  return guarded([&] { *out = ssf::nonmodular_density(inst->v); });
}

/* ---- multiplicity ---- */

ssf_status ssf_multiplicity_dp(const ssf_instance* inst, const ssf_caps* caps,
                               ssf_multiplicity** out) {
  if (!inst || !out) return arg_error("inst and out must be non-null");
  return guarded([&] {
    *out = new ssf_multiplicity{ssf::multiplicity_dp(inst->v, to_caps(caps))};
  });
}

ssf_status ssf_multiplicity_bruteforce(const ssf_instance* inst,
                                       const ssf_caps* caps,
                                       ssf_multiplicity** out) {
  if (!inst || !out) return arg_error("inst and out must be non-null");
  return guarded([&] {
    *out = new ssf_multiplicity{
        ssf::multiplicity_bruteforce(inst->v, to_caps(caps))};
  });
}

void ssf_multiplicity_free(ssf_multiplicity* mv) { delete mv; }

uint64_t ssf_multiplicity_modulus(const ssf_multiplicity* mv) {
  return mv ? mv->v.modulus() : 0;
}

uint32_t ssf_multiplicity_s(const ssf_multiplicity* mv) {
  return mv ? mv->v.s() : 0;
}

uint64_t ssf_multiplicity_support_size(const ssf_multiplicity* mv) {
  return mv ? mv->v.support_size() : 0;
}

int ssf_multiplicity_unit_min(const ssf_multiplicity* mv) {
  return mv && mv->v.unit_min_multiplicity() ? 1 : 0;
}

ssf_status ssf_multiplicity_count(const ssf_multiplicity* mv, uint64_t residue,
                                  char** out) {
  if (!mv || !out) return arg_error("mv and out must be non-null");
  return guarded([&] { *out = dup_string(ssf::to_decimal(mv->v.count(residue))); });
}

ssf_status ssf_multiplicity_csv(const ssf_multiplicity* mv, char** out) {
  if (!mv || !out) return arg_error("mv and out must be non-null");
  return guarded([&] { *out = dup_string(ssf::multiplicity_to_csv(mv->v)); });
}

ssf_status ssf_multiplicity_json(const ssf_multiplicity* mv, char** out) {
  if (!mv || !out) return arg_error("mv and out must be non-null");
  return guarded([&] { *out = dup_string(ssf::multiplicity_to_json(mv->v)); });
}

/* ---- collision classes ---- */

ssf_status ssf_collision_classes(const ssf_instance* inst, uint64_t min_size,
                                 const ssf_caps* caps, ssf_collisions** out) {
  if (!inst || !out) return arg_error("inst and out must be non-null");
  return guarded([&] {
    auto handle = new ssf_collisions{
        ssf::collision_classes(inst->v, min_size, to_caps(caps)), {}};
    handle->rendered.reserve(handle->v.size());
    for (const auto& cls : handle->v)
      handle->rendered.push_back(render_members(cls));
    *out = handle;
  });
}

void ssf_collisions_free(ssf_collisions* cls) { delete cls; }

size_t ssf_collisions_count(const ssf_collisions* cls) {
  return cls ? cls->v.size() : 0;
}

uint64_t ssf_collisions_residue(const ssf_collisions* cls, size_t i) {
  return cls && i < cls->v.size() ? cls->v[i].residue : 0;
}

size_t ssf_collisions_size(const ssf_collisions* cls, size_t i) {
  return cls && i < cls->v.size() ? cls->v[i].size() : 0;
}

const char* ssf_collisions_member(const ssf_collisions* cls, size_t i,
                                  size_t j) {
  if (!cls || i >= cls->rendered.size() || j >= cls->rendered[i].size())
    return nullptr;
  return cls->rendered[i][j].c_str();
}

ssf_status ssf_collisions_csv(const ssf_collisions* cls, char** out) {
  if (!cls || !out) return arg_error("cls and out must be non-null");
  return guarded([&] { *out = dup_string(ssf::collisions_to_csv(cls->v)); });
}

ssf_status ssf_collisions_json(const ssf_collisions* cls, char** out) {
  if (!cls || !out) return arg_error("cls and out must be non-null");
  return guarded([&] { *out = dup_string(ssf::collisions_to_json(cls->v)); });
}

/* ---- spectrum ---- */

ssf_status ssf_dimension(const ssf_multiplicity* mv, double q, double* out) {
  if (!mv || !out) return arg_error("mv and out must be non-null");
  return guarded([&] {
    if (std::isnan(q))
      ssf::fail(ErrorCode::InvalidArgument, "q must not be NaN");
    if (std::isinf(q)) {
      auto [lo, hi] = ssf::dimension_extremes(mv->v);
      *out = q < 0 ? lo : hi;
    } else if (q == 1.0) {
      *out = ssf::dimension_info(mv->v);
    } else {
      *out = ssf::dimension_q(mv->v, q);
    }
  });
}

ssf_status ssf_dimension_extremes(const ssf_multiplicity* mv,
                                  double* d_neg_inf, double* d_pos_inf) {
  if (!mv || !d_neg_inf || !d_pos_inf)
    return arg_error("mv and both outputs must be non-null");
  return guarded([&] {
    auto [lo, hi] = ssf::dimension_extremes(mv->v);
    *d_neg_inf = lo;
    *d_pos_inf = hi;
  });
}

ssf_status ssf_spectrum_eval(const ssf_multiplicity* mv, const double* qs,
                             size_t count, ssf_spectrum** out) {
  if (!mv || !out || (!qs && count > 0))
    return arg_error("mv, qs and out must be non-null");
  return guarded([&] {
    std::vector<ssf::ExtendedQ> grid;
    grid.reserve(count);
    for (size_t i = 0; i < count; ++i)
      grid.push_back(ssf::ExtendedQ::from_double(qs[i]));
    *out = new ssf_spectrum{ssf::spectrum(mv->v, std::move(grid))};
  });
}

void ssf_spectrum_free(ssf_spectrum* sp) { delete sp; }

size_t ssf_spectrum_size(const ssf_spectrum* sp) {
  return sp ? sp->v.points.size() : 0;
}

ssf_status ssf_spectrum_point(const ssf_spectrum* sp, size_t i, double* q,
                              double* value) {
  if (!sp || !q || !value) return arg_error("sp, q and value must be non-null");
  if (i >= sp->v.points.size()) return arg_error("point index out of range");
  *q = sp->v.points[i].q.as_double();
  *value = sp->v.points[i].value;
  return SSF_OK;
}

ssf_status ssf_spectrum_csv(const ssf_spectrum* sp, char** out) {
  if (!sp || !out) return arg_error("sp and out must be non-null");
  return guarded([&] { *out = dup_string(ssf::spectrum_to_csv(sp->v)); });
}

ssf_status ssf_spectrum_json(const ssf_spectrum* sp, char** out) {
  if (!sp || !out) return arg_error("sp and out must be non-null");
  return guarded([&] { *out = dup_string(ssf::spectrum_to_json(sp->v)); });
}

ssf_status ssf_singularity_eval(const ssf_multiplicity* mv,
                                ssf_singularity** out) {
  if (!mv || !out) return arg_error("mv and out must be non-null");
  return guarded([&] {
    auto handle = new ssf_singularity{ssf::singularity_strengths(mv->v), {}};
    handle->rendered.reserve(handle->v.size());
    for (const auto& e : handle->v)
      handle->rendered.push_back(ssf::to_decimal(e.l));
    *out = handle;
  });
}

void ssf_singularity_free(ssf_singularity* sg) { delete sg; }

size_t ssf_singularity_count(const ssf_singularity* sg) {
  return sg ? sg->v.size() : 0;
}

ssf_status ssf_singularity_row(const ssf_singularity* sg, size_t i,
                               const char** l, double* alpha, uint64_t* count) {
  if (!sg || !l || !alpha || !count)
    return arg_error("sg and all outputs must be non-null");
  if (i >= sg->v.size()) return arg_error("row index out of range");
  *l = sg->rendered[i].c_str();
  *alpha = sg->v[i].alpha;
  *count = sg->v[i].count;
  return SSF_OK;
}

ssf_status ssf_singularity_csv(const ssf_singularity* sg, char** out) {
  if (!sg || !out) return arg_error("sg and out must be non-null");
  return guarded([&] { *out = dup_string(ssf::singularity_to_csv(sg->v)); });
}

ssf_status ssf_singularity_json(const ssf_singularity* sg, char** out) {
  if (!sg || !out) return arg_error("sg and out must be non-null");
  return guarded([&] { *out = dup_string(ssf::singularity_to_json(sg->v)); });
}

/* ---- families ---- */

ssf_status ssf_family_arithmetic(uint64_t a, const uint64_t* sizes,
                                 size_t count, ssf_family** out) {
  if (!out || (!sizes && count > 0))
    return arg_error("sizes and out must be non-null");
  return guarded([&] {
    std::vector<uint64_t> sz(sizes, sizes + count);
    *out = new ssf_family{ssf::InstanceFamily::arithmetic(a, sz)};
  });
}

ssf_status ssf_family_random_density(double rho, uint64_t seed,
                                     const uint64_t* sizes, size_t count,
                                     const ssf_caps* caps, ssf_family** out) {
  if (!out || (!sizes && count > 0))
    return arg_error("sizes and out must be non-null");
  return guarded([&] {
    std::vector<uint64_t> sz(sizes, sizes + count);
    *out = new ssf_family{
        ssf::InstanceFamily::random_density(rho, seed, sz, to_caps(caps))};
  });
}

ssf_status ssf_family_superincreasing(uint64_t seed, const uint64_t* sizes,
                                      size_t count, const ssf_caps* caps,
                                      ssf_family** out) {
  if (!out || (!sizes && count > 0))
    return arg_error("sizes and out must be non-null");
  return guarded([&] {
    std::vector<uint64_t> sz(sizes, sizes + count);
    *out = new ssf_family{
        ssf::InstanceFamily::superincreasing(seed, sz, to_caps(caps))};
  });
}

ssf_status ssf_family_explicit(const ssf_instance* const* members, size_t count,
                               ssf_family** out) {
  if (!out || (!members && count > 0))
    return arg_error("members and out must be non-null");
  return guarded([&] {
    std::vector<ssf::Instance> list;
    list.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (!members[i])
        ssf::fail(ErrorCode::InvalidArgument, "family member is null");
      list.push_back(members[i]->v);
    }
    *out = new ssf_family{ssf::InstanceFamily::explicit_list(std::move(list))};
  });
}

void ssf_family_free(ssf_family* fam) { delete fam; }

size_t ssf_family_size(const ssf_family* fam) { return fam ? fam->v.size() : 0; }

ssf_status ssf_family_dimension(const ssf_family* fam, double q, int method,
                                const ssf_caps* caps,
                                ssf_family_estimate** out) {
  if (!fam || !out) return arg_error("fam and out must be non-null");
  if (method != 0 && method != 1)
    return arg_error("method must be 0 (last sample) or 1 (extrapolation)");
  return guarded([&] {
    ssf::ExtendedQ eq = ssf::ExtendedQ::from_double(q);
    ssf::EstimateMethod m = method == 0
                                ? ssf::EstimateMethod::LastSample
                                : ssf::EstimateMethod::ExtrapolateInverseS;
    *out = new ssf_family_estimate{
        ssf::family_dimension(fam->v, eq, m, to_caps(caps))};
  });
}

void ssf_family_estimate_free(ssf_family_estimate* est) { delete est; }

double ssf_family_estimate_value(const ssf_family_estimate* est) {
  return est ? est->v.estimate : 0.0;
}

size_t ssf_family_estimate_samples(const ssf_family_estimate* est) {
  return est ? est->v.samples.size() : 0;
}

ssf_status ssf_family_estimate_sample(const ssf_family_estimate* est, size_t i,
                                      uint32_t* s, double* value) {
  if (!est || !s || !value)
    return arg_error("est and both outputs must be non-null");
  if (i >= est->v.samples.size()) return arg_error("sample index out of range");
  *s = est->v.samples[i].first;
  *value = est->v.samples[i].second;
  return SSF_OK;
}

size_t ssf_family_estimate_warnings(const ssf_family_estimate* est) {
  return est ? est->v.warnings.size() : 0;
}

const char* ssf_family_estimate_warning(const ssf_family_estimate* est,
                                        size_t i) {
  if (!est || i >= est->v.warnings.size()) return nullptr;
  return est->v.warnings[i].c_str();
}

ssf_status ssf_family_estimate_csv(const ssf_family_estimate* est, char** out) {
  if (!est || !out) return arg_error("est and out must be non-null");
  return guarded([&] { *out = dup_string(ssf::family_to_csv(est->v)); });
}

ssf_status ssf_family_estimate_json(const ssf_family_estimate* est, char** out) {
  if (!est || !out) return arg_error("est and out must be non-null");
  return guarded([&] { *out = dup_string(ssf::family_to_json(est->v)); });
}

/* ---- weak partitions ---- */

void ssf_strings_free(ssf_strings* list) { delete list; }

size_t ssf_strings_count(const ssf_strings* list) {
  return list ? list->v.size() : 0;
}

const char* ssf_strings_item(const ssf_strings* list, size_t i) {
  if (!list || i >= list->v.size()) return nullptr;
  return list->v[i].c_str();
}

ssf_status ssf_weak_partition(const ssf_instance* inst, const ssf_caps* caps,
                              ssf_strings** out) {
  if (!inst || !out) return arg_error("inst and out must be non-null");
  return guarded([&] {
    auto sols = ssf::weak_partition_enumerate(inst->v, to_caps(caps));
    auto handle = new ssf_strings{};
    handle->v.reserve(sols.size());
    for (const auto& sol : sols) handle->v.push_back(sol.to_string());
    *out = handle;
  });
}

ssf_status ssf_weak_partition_json(const ssf_instance* inst,
                                   const ssf_caps* caps, char** out) {
  if (!inst || !out) return arg_error("inst and out must be non-null");
  return guarded([&] {
    auto sols = ssf::weak_partition_enumerate(inst->v, to_caps(caps));
    *out = dup_string(ssf::solutions_to_json(sols));
  });
}

ssf_status ssf_weighted_zero_count(const ssf_instance* inst,
                                   const ssf_caps* caps, char** out) {
  if (!inst || !out) return arg_error("inst and out must be non-null");
  return guarded([&] {
    *out = dup_string(
        ssf::to_decimal(ssf::weighted_zero_count_dp(inst->v, to_caps(caps))));
  });
}

ssf_status ssf_has_collision(const ssf_instance* inst, const ssf_caps* caps,
                             int* out) {
  if (!inst || !out) return arg_error("inst and out must be non-null");
  return guarded([&] {
    *out = ssf::has_collision(inst->v, to_caps(caps)) ? 1 : 0;
  });
}

ssf_status ssf_lower_bound_eval(const ssf_instance* inst, const ssf_caps* caps,
                                ssf_lower_bound** out) {
  if (!inst || !out) return arg_error("inst and out must be non-null");
  return guarded([&] {
    auto handle = new ssf_lower_bound{ssf::lower_bound(inst->v, to_caps(caps)),
                                      "", ""};
    handle->total_dec = ssf::to_decimal(handle->v.total_weighted);
    handle->rhs_dec = ssf::to_decimal(handle->v.rhs);
    *out = handle;
  });
}

void ssf_lower_bound_free(ssf_lower_bound* rep) { delete rep; }

const char* ssf_lower_bound_total(const ssf_lower_bound* rep) {
  return rep ? rep->total_dec.c_str() : nullptr;
}

const char* ssf_lower_bound_rhs(const ssf_lower_bound* rep) {
  return rep ? rep->rhs_dec.c_str() : nullptr;
}

int ssf_lower_bound_has_d0(const ssf_lower_bound* rep) {
  return rep && rep->v.d0_bound ? 1 : 0;
}

double ssf_lower_bound_d0(const ssf_lower_bound* rep) {
  return rep && rep->v.d0_bound ? *rep->v.d0_bound : 0.0;
}

int ssf_lower_bound_has_image_size(const ssf_lower_bound* rep) {
  return rep && rep->v.image_size ? 1 : 0;
}

uint64_t ssf_lower_bound_image_size(const ssf_lower_bound* rep) {
  return rep && rep->v.image_size ? *rep->v.image_size : 0;
}

ssf_status ssf_lower_bound_json(const ssf_lower_bound* rep, char** out) {
  if (!rep || !out) return arg_error("rep and out must be non-null");
  return guarded([&] { *out = dup_string(ssf::lower_bound_to_json(rep->v)); });
}

ssf_status ssf_expand_collisions(const ssf_instance* inst, const char* solution,
                                 ssf_pairs** out) {
  if (!inst || !solution || !out)
    return arg_error("inst, solution and out must be non-null");
  return guarded([&] {
    auto sol = ssf::WeakPartitionSolution::from_string(solution);
    auto pairs = ssf::expand_collisions(sol, inst->v);
    auto handle = new ssf_pairs{};
    handle->v.reserve(pairs.size());
    for (const auto& p : pairs)
      handle->v.emplace_back(bits_of(p.x1), bits_of(p.x2));
    *out = handle;
  });
}

void ssf_pairs_free(ssf_pairs* pairs) { delete pairs; }

size_t ssf_pairs_count(const ssf_pairs* pairs) {
  return pairs ? pairs->v.size() : 0;
}

const char* ssf_pairs_x1(const ssf_pairs* pairs, size_t i) {
  if (!pairs || i >= pairs->v.size()) return nullptr;
  return pairs->v[i].first.c_str();
}

const char* ssf_pairs_x2(const ssf_pairs* pairs, size_t i) {
  if (!pairs || i >= pairs->v.size()) return nullptr;
  return pairs->v[i].second.c_str();
}

ssf_status ssf_collision_to_partition(const ssf_instance* inst, const char* x1,
                                      const char* x2, char** out) {
  if (!inst || !x1 || !x2 || !out)
    return arg_error("inst, x1, x2 and out must be non-null");
  return guarded([&] {
    ssf::CollisionPair pair{parse_bits(x1), parse_bits(x2)};
    *out = dup_string(ssf::collision_to_partition(pair, inst->v).to_string());
  });
}

ssf_status ssf_four_collision(const ssf_instance* inst, const char* solution,
                              const uint64_t* t1, size_t n1, const uint64_t* t2,
                              size_t n2, char** derived,
                              ssf_collisions** witness) {
  if (!inst || !solution || !derived || !witness || (!t1 && n1 > 0) ||
      (!t2 && n2 > 0))
    return arg_error("inst, solution and outputs must be non-null");
  return guarded([&] {
    auto sol = ssf::WeakPartitionSolution::from_string(solution);
    std::vector<size_t> s1(t1, t1 + n1), s2(t2, t2 + n2);
    auto result = ssf::four_collision(sol, std::move(s1), std::move(s2), inst->v);
    auto handle = new ssf_collisions{{std::move(result.witness)}, {}};
    handle->rendered.push_back(render_members(handle->v[0]));
    *derived = dup_string(result.derived.to_string());
    *witness = handle;
  });
}

/* ---- image sets ---- */

ssf_status ssf_image_set(const ssf_instance* inst, int lenient,
                         const ssf_caps* caps, ssf_image** out) {
  if (!inst || !out) return arg_error("inst and out must be non-null");
  return guarded([&] {
    auto mode = lenient ? ssf::BoundaryMode::Lenient : ssf::BoundaryMode::Strict;
    *out = new ssf_image{ssf::image_set(inst->v, mode, to_caps(caps))};
  });
}

ssf_status ssf_image_set_explicit(const uint64_t* residues, size_t count,
                                  uint64_t modulus, int lenient,
                                  ssf_image** out) {
  if (!out || (!residues && count > 0))
    return arg_error("residues and out must be non-null");
  return guarded([&] {
    std::vector<uint64_t> r(residues, residues + count);
    auto mode = lenient ? ssf::BoundaryMode::Lenient : ssf::BoundaryMode::Strict;
    *out = new ssf_image{ssf::image_set_explicit(r, modulus, mode)};
  });
}

void ssf_image_free(ssf_image* img) { delete img; }

uint64_t ssf_image_modulus(const ssf_image* img) {
  return img ? img->v.modulus() : 0;
}

uint64_t ssf_image_c_min(const ssf_image* img) {
  return img ? img->v.c_min() : 0;
}

int ssf_image_boundary_warning(const ssf_image* img) {
  return img && img->v.boundary_warning() ? 1 : 0;
}

size_t ssf_image_size(const ssf_image* img) { return img ? img->v.size() : 0; }

uint64_t ssf_image_residue(const ssf_image* img, size_t i) {
  if (!img || i >= img->v.size()) return 0;
  return img->v.residues()[i];
}

ssf_status ssf_image_components(const ssf_image* img, ssf_components** out) {
  if (!img || !out) return arg_error("img and out must be non-null");
  return guarded([&] {
    *out = new ssf_components{ssf::components(img->v)};
  });
}

void ssf_components_free(ssf_components* dec) { delete dec; }

uint64_t ssf_components_n(const ssf_components* dec) {
  return dec ? dec->v.n : 0;
}

uint64_t ssf_components_n_prime(const ssf_components* dec) {
  return dec ? dec->v.n_prime : 0;
}

ssf_status ssf_components_at(const ssf_components* dec, size_t i,
                             uint64_t* start, uint64_t* size) {
  if (!dec || !start || !size)
    return arg_error("dec and both outputs must be non-null");
  if (i >= dec->v.components.size())
    return arg_error("component index out of range");
  *start = dec->v.components[i].start;
  *size = dec->v.components[i].size;
  return SSF_OK;
}

ssf_status ssf_similarity_dimension(const ssf_components* dec, uint64_t modulus,
                                    ssf_dimension_report* out) {
  if (!dec || !out) return arg_error("dec and out must be non-null");
  return guarded([&] {
    ssf::DimensionReport rep = ssf::similarity_dimension(dec->v, modulus);
    out->t = rep.t;
    out->lower = rep.lower;
    out->upper = rep.upper;
    out->residual = rep.residual;
    out->iterations = rep.iterations;
  });
}

ssf_status ssf_hausdorff_json(const ssf_image* img, char** out) {
  if (!img || !out) return arg_error("img and out must be non-null");
  return guarded([&] { *out = dup_string(ssf::hausdorff_report_json(img->v)); });
}

ssf_status ssf_attractor_digits(const ssf_image* img, uint32_t depth,
                                const ssf_caps* caps, ssf_strings** out) {
  if (!img || !out) return arg_error("img and out must be non-null");
  return guarded([&] {
    auto digits = ssf::attractor_digits(img->v, depth, to_caps(caps));
    *out = new ssf_strings{std::move(digits)};
  });
}

}  // extern "C"
