// Command line front end over the C API.  Every subcommand builds an
// instance (or an explicit image), runs one analysis and prints the
// machine-readable result.  Exit codes: 0 success, 2 usage or validation
// failure, 3 resource caps or internal failure, 4 structural assumption
// violated (non-injective, surjective, no boundary gap).

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ssfractal.h"

namespace {

struct UsageError {
  std::string message;
};

[[noreturn]] void usage_fail(const std::string& message) {
  throw UsageError{message};
}

int exit_code_for(ssf_status status) {
  switch (status) {
    case SSF_OK:
      return 0;
    case SSF_ERR_DENSITY_OVERFLOW:
    case SSF_ERR_MODULUS_TOO_LARGE:
    case SSF_ERR_INSTANCE_TOO_LARGE:
    case SSF_ERR_OUTPUT_TOO_LARGE:
    case SSF_ERR_NO_MEMORY:
    case SSF_ERR_INTERNAL:
      return 3;
    case SSF_ERR_NOT_INJECTIVE:
    case SSF_ERR_SURJECTIVE:
    case SSF_ERR_NO_BOUNDARY_GAP:
      return 4;
    default:
      return 2;
  }
}

struct StatusError {
  ssf_status status;
};

// Raises unless the call succeeded; the handler at the bottom of main turns
// the status into a diagnostic plus exit code.
void check(ssf_status status) {
  if (status != SSF_OK) throw StatusError{status};
}

uint64_t parse_u64(const std::string& text, const char* what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    usage_fail(std::string(what) + " must be a nonnegative integer, got '" +
               text + "'");
  errno = 0;
  char* end = nullptr;
  unsigned long long v = std::strtoull(text.c_str(), &end, 10);
  if (errno != 0 || end != text.c_str() + text.size())
    usage_fail(std::string(what) + " is out of range: '" + text + "'");
  return v;
}

double parse_real(const std::string& text, const char* what) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno != 0 ||
      !std::isfinite(v))
    usage_fail(std::string(what) + " must be a finite real, got '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<uint64_t> parse_u64_list(const std::string& text, const char* what) {
  std::vector<uint64_t> out;
  for (const std::string& tok : split(text, ','))
    out.push_back(parse_u64(tok, what));
  return out;
}

// Size specs are comma-joined tokens, each a plain integer or an inclusive
// lo:hi[:step] range.
std::vector<uint64_t> parse_size_spec(const std::string& text) {
  std::vector<uint64_t> out;
  for (const std::string& tok : split(text, ',')) {
    std::vector<std::string> parts = split(tok, ':');
    if (parts.size() == 1) {
      out.push_back(parse_u64(parts[0], "size"));
      continue;
    }
    if (parts.size() > 3) usage_fail("size range '" + tok + "' has too many ':'");
    uint64_t lo = parse_u64(parts[0], "size range start");
    uint64_t hi = parse_u64(parts[1], "size range end");
    uint64_t step = parts.size() == 3 ? parse_u64(parts[2], "size range step") : 1;
    if (step == 0) usage_fail("size range step must be positive");
    if (hi < lo) usage_fail("size range '" + tok + "' is empty");
    for (uint64_t v = lo; v <= hi; v += step) {
      out.push_back(v);
      if (v > hi - step) break;  // guards against wraparound
    }
  }
  return out;
}

// Grid tokens: -inf, +inf, a real, or an inclusive lo:hi[:step] range of
// reals.  The evaluation sorts and dedupes, so order here is free.
std::vector<double> parse_q_grid(const std::string& text) {
  std::vector<double> out;
  for (const std::string& tok : split(text, ',')) {
    if (tok == "-inf") {
      out.push_back(-HUGE_VAL);
      continue;
    }
    if (tok == "+inf" || tok == "inf") {
      out.push_back(HUGE_VAL);
      continue;
    }
    std::vector<std::string> parts = split(tok, ':');
    if (parts.size() == 1) {
      out.push_back(parse_real(parts[0], "q"));
      continue;
    }
    if (parts.size() > 3) usage_fail("q range '" + tok + "' has too many ':'");
    double lo = parse_real(parts[0], "q range start");
    double hi = parse_real(parts[1], "q range end");
    double step = parts.size() == 3 ? parse_real(parts[2], "q range step") : 1.0;
    if (step <= 0) usage_fail("q range step must be positive");
    if (hi < lo) usage_fail("q range '" + tok + "' is empty");
    for (uint64_t k = 0;; ++k) {
      double v = lo + double(k) * step;
      if (v > hi + step * 1e-9) break;
      out.push_back(v);
    }
  }
  if (out.empty()) usage_fail("the q grid is empty");
  return out;
}

// Exactly one way of naming the instance per invocation.
struct SourceOpts {
  std::string weights;
  std::optional<uint64_t> modulus;
  std::string file;
  std::string arith;
  std::string random;
  std::optional<uint64_t> super_s;
  uint64_t seed = 0;
};

void add_source_flags(CLI::App* cmd, SourceOpts& src) {
  cmd->add_option("--weights", src.weights,
                  "comma-separated weights a_1,...,a_s (needs --modulus)");
  cmd->add_option("--modulus", src.modulus, "modulus A");
  cmd->add_option("--file", src.file, "instance JSON file");
  cmd->add_option("--arith", src.arith,
                  "arithmetic progression instance 's,a'");
  cmd->add_option("--random", src.random,
                  "random instance 's,rho' at the given density");
  cmd->add_option("--super", src.super_s, "superincreasing instance of size s");
  cmd->add_option("--seed", src.seed, "generator seed (default 0)");
}

ssf_instance* make_instance(const SourceOpts& src, const ssf_caps& caps) {
  int sources = !src.weights.empty() + !src.file.empty() + !src.arith.empty() +
                !src.random.empty() + src.super_s.has_value();
  if (sources != 1)
    usage_fail("exactly one of --weights, --file, --arith, --random, --super "
               "is required");
  ssf_instance* inst = nullptr;
  if (!src.weights.empty()) {
    if (!src.modulus) usage_fail("--weights requires --modulus");
    std::vector<uint64_t> w = parse_u64_list(src.weights, "weight");
    check(ssf_instance_new(w.data(), w.size(), *src.modulus, &inst));
  } else if (!src.file.empty()) {
    check(ssf_instance_load(src.file.c_str(), &inst));
  } else if (!src.arith.empty()) {
    std::vector<std::string> parts = split(src.arith, ',');
    if (parts.size() != 2) usage_fail("--arith expects 's,a'");
    check(ssf_instance_arithmetic(parse_u64(parts[0], "s"),
                                  parse_u64(parts[1], "a"), &inst));
  } else if (!src.random.empty()) {
    std::vector<std::string> parts = split(src.random, ',');
    if (parts.size() != 2) usage_fail("--random expects 's,rho'");
    check(ssf_instance_random_density(parse_u64(parts[0], "s"),
                                      parse_real(parts[1], "rho"), src.seed,
                                      &caps, &inst));
  } else {
    check(ssf_instance_superincreasing(*src.super_s, src.seed, &caps, &inst));
  }
  return inst;
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::FILE* f = std::fopen(out_path.c_str(), "wb");
  if (!f) usage_fail("cannot open output file '" + out_path + "'");
  size_t written = std::fwrite(text.data(), 1, text.size(), f);
  bool ok = written == text.size() && std::fclose(f) == 0;
  if (!ok) usage_fail("cannot write output file '" + out_path + "'");
}

// Wraps a library-owned string and hands back a std::string.
std::string take(char* str) {
  std::string out = str ? str : "";
  ssf_free_string(str);
  return out;
}

struct InstanceGuard {
  ssf_instance* ptr = nullptr;
  ~InstanceGuard() { ssf_instance_free(ptr); }
};

struct MultiplicityGuard {
  ssf_multiplicity* ptr = nullptr;
  ~MultiplicityGuard() { ssf_multiplicity_free(ptr); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact multifractal analysis of modular subset sum functions"};
  app.set_version_flag("--version", ssf_version());
  app.require_subcommand(1);

  std::string caps_spec;
  app.add_option("--caps", caps_spec,
                 "cap overrides 'brute=..,ternary=..,modulus=..,attractor=..' "
                 "(applied over the SSFRACTAL_CAPS environment variable)");

  // spectrum
  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "dimension spectrum D_q over a q grid");
  SourceOpts spectrum_src;
  add_source_flags(spectrum_cmd, spectrum_src);
  std::string spectrum_q;
  spectrum_cmd->add_option("--q", spectrum_q,
                           "q grid: comma list of reals, lo:hi:step ranges, "
                           "-inf, +inf")
      ->required();
  std::string spectrum_format = "csv";
  spectrum_cmd->add_option("--format", spectrum_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  std::string spectrum_out;
  spectrum_cmd->add_option("--out", spectrum_out, "output path (default stdout)");

  // singularity
  auto* singularity_cmd = app.add_subcommand(
      "singularity", "singularity strengths alpha_l per multiplicity level");
  SourceOpts singularity_src;
  add_source_flags(singularity_cmd, singularity_src);
  std::string singularity_format = "csv";
  singularity_cmd->add_option("--format", singularity_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  std::string singularity_out;
  singularity_cmd->add_option("--out", singularity_out,
                              "output path (default stdout)");

  // collisions
  auto* collisions_cmd = app.add_subcommand(
      "collisions", "residue classes with at least --min-size preimages");
  SourceOpts collisions_src;
  add_source_flags(collisions_cmd, collisions_src);
  uint64_t min_size = 2;
  collisions_cmd->add_option("--min-size", min_size,
                             "smallest class size to report (default 2)")
      ->check(CLI::PositiveNumber);
  std::string collisions_format = "csv";
  collisions_cmd->add_option("--format", collisions_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  std::string collisions_out;
  collisions_cmd->add_option("--out", collisions_out,
                             "output path (default stdout)");

  // weakpartition
  auto* weakpartition_cmd = app.add_subcommand(
      "weakpartition", "canonical weak partition solutions as +0- strings");
  SourceOpts weakpartition_src;
  add_source_flags(weakpartition_cmd, weakpartition_src);
  std::string weakpartition_format = "text";
  weakpartition_cmd->add_option("--format", weakpartition_format,
                                "text (one solution per line) or json")
      ->check(CLI::IsMember({"text", "json"}));
  std::string weakpartition_out;
  weakpartition_cmd->add_option("--out", weakpartition_out,
                                "output path (default stdout)");

  // lowerbound
  auto* lowerbound_cmd = app.add_subcommand(
      "lowerbound", "weighted zero count and the image size lower bound");
  SourceOpts lowerbound_src;
  add_source_flags(lowerbound_cmd, lowerbound_src);
  std::string lowerbound_out;
  lowerbound_cmd->add_option("--out", lowerbound_out,
                             "output path (default stdout)");

  // hausdorff
  auto* hausdorff_cmd = app.add_subcommand(
      "hausdorff",
      "similarity dimension of the self-similar set of an injective instance");
  SourceOpts hausdorff_src;
  add_source_flags(hausdorff_cmd, hausdorff_src);
  std::string hausdorff_image;
  hausdorff_cmd->add_option("--image", hausdorff_image,
                            "explicit image residues (needs --modulus, "
                            "replaces the instance source)");
  std::string hausdorff_mode = "strict";
  hausdorff_cmd->add_option("--mode", hausdorff_mode,
                            "boundary anchoring: strict or lenient")
      ->check(CLI::IsMember({"strict", "lenient"}));
  std::optional<uint32_t> hausdorff_digits;
  hausdorff_cmd->add_option("--digits", hausdorff_digits,
                            "print attractor digit strings of this depth "
                            "instead of the report")
      ->check(CLI::PositiveNumber);
  std::string hausdorff_out;
  hausdorff_cmd->add_option("--out", hausdorff_out,
                            "output path (default stdout)");

  // family
  auto* family_cmd = app.add_subcommand(
      "family", "generalized dimension estimate over an instance family");
  std::string family_kind;
  family_cmd->add_option("--kind", family_kind,
                         "family kind: arithmetic, random, super")
      ->required()
      ->check(CLI::IsMember({"arithmetic", "random", "super"}));
  std::string family_sizes;
  family_cmd->add_option("--s", family_sizes,
                         "member sizes: comma list or lo:hi[:step] ranges")
      ->required();
  uint64_t family_a = 1;
  family_cmd->add_option("--a", family_a, "progression step (kind arithmetic)");
  double family_rho = 1.0;
  family_cmd->add_option("--rho", family_rho, "target density (kind random)");
  uint64_t family_seed = 0;
  family_cmd->add_option("--seed", family_seed, "generator seed (default 0)");
  std::string family_q;
  family_cmd->add_option("--q", family_q, "dimension order: real, -inf or +inf")
      ->required();
  std::string family_method = "last-sample";
  family_cmd->add_option("--method", family_method,
                         "estimator: last-sample or extrapolate")
      ->check(CLI::IsMember({"last-sample", "extrapolate"}));
  std::string family_format = "csv";
  family_cmd->add_option("--format", family_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  std::string family_out;
  family_cmd->add_option("--out", family_out, "output path (default stdout)");

  // instance
  auto* instance_cmd = app.add_subcommand(
      "instance", "materialize an instance as its JSON document");
  SourceOpts instance_src;
  add_source_flags(instance_cmd, instance_src);
  std::string instance_out;
  instance_cmd->add_option("--out", instance_out,
                           "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  try {
    ssf_caps caps;
    ssf_caps_defaults(&caps);
    if (const char* env = std::getenv("SSFRACTAL_CAPS"))
      if (ssf_caps_parse(env, &caps) != SSF_OK)
        usage_fail(std::string("bad SSFRACTAL_CAPS: ") + ssf_last_error());
    if (!caps_spec.empty())
      if (ssf_caps_parse(caps_spec.c_str(), &caps) != SSF_OK)
        usage_fail(std::string("bad --caps: ") + ssf_last_error());

    if (app.got_subcommand(spectrum_cmd)) {
      std::vector<double> grid = parse_q_grid(spectrum_q);
      InstanceGuard inst;
      inst.ptr = make_instance(spectrum_src, caps);
      MultiplicityGuard mv;
      check(ssf_multiplicity_dp(inst.ptr, &caps, &mv.ptr));
      ssf_spectrum* sp = nullptr;
      check(ssf_spectrum_eval(mv.ptr, grid.data(), grid.size(), &sp));
      char* text = nullptr;
      ssf_status st = spectrum_format == "json" ? ssf_spectrum_json(sp, &text)
                                                : ssf_spectrum_csv(sp, &text);
      ssf_spectrum_free(sp);
      check(st);
      write_output(take(text), spectrum_out);
    } else if (app.got_subcommand(singularity_cmd)) {
      InstanceGuard inst;
      inst.ptr = make_instance(singularity_src, caps);
      MultiplicityGuard mv;
      check(ssf_multiplicity_dp(inst.ptr, &caps, &mv.ptr));
      ssf_singularity* sg = nullptr;
      check(ssf_singularity_eval(mv.ptr, &sg));
      char* text = nullptr;
      ssf_status st = singularity_format == "json"
                          ? ssf_singularity_json(sg, &text)
                          : ssf_singularity_csv(sg, &text);
      ssf_singularity_free(sg);
      check(st);
      write_output(take(text), singularity_out);
    } else if (app.got_subcommand(collisions_cmd)) {
      InstanceGuard inst;
      inst.ptr = make_instance(collisions_src, caps);
      ssf_collisions* cls = nullptr;
      check(ssf_collision_classes(inst.ptr, min_size, &caps, &cls));
      char* text = nullptr;
      ssf_status st = collisions_format == "json"
                          ? ssf_collisions_json(cls, &text)
                          : ssf_collisions_csv(cls, &text);
      ssf_collisions_free(cls);
      check(st);
      write_output(take(text), collisions_out);
    } else if (app.got_subcommand(weakpartition_cmd)) {
      InstanceGuard inst;
      inst.ptr = make_instance(weakpartition_src, caps);
      if (weakpartition_format == "json") {
        char* text = nullptr;
        check(ssf_weak_partition_json(inst.ptr, &caps, &text));
        write_output(take(text), weakpartition_out);
      } else {
        ssf_strings* sols = nullptr;
        check(ssf_weak_partition(inst.ptr, &caps, &sols));
        std::string text;
        for (size_t i = 0; i < ssf_strings_count(sols); ++i) {
          text += ssf_strings_item(sols, i);
          text += '\n';
        }
        ssf_strings_free(sols);
        write_output(text, weakpartition_out);
      }
    } else if (app.got_subcommand(lowerbound_cmd)) {
      InstanceGuard inst;
      inst.ptr = make_instance(lowerbound_src, caps);
      ssf_lower_bound* rep = nullptr;
      check(ssf_lower_bound_eval(inst.ptr, &caps, &rep));
      char* text = nullptr;
      ssf_status st = ssf_lower_bound_json(rep, &text);
      ssf_lower_bound_free(rep);
      check(st);
      write_output(take(text), lowerbound_out);
    } else if (app.got_subcommand(hausdorff_cmd)) {
      int lenient = hausdorff_mode == "lenient" ? 1 : 0;
      ssf_image* img = nullptr;
      if (!hausdorff_image.empty()) {
        if (!hausdorff_src.modulus)
          usage_fail("--image requires --modulus");
        if (!hausdorff_src.weights.empty() || !hausdorff_src.file.empty() ||
            !hausdorff_src.arith.empty() || !hausdorff_src.random.empty() ||
            hausdorff_src.super_s.has_value())
          usage_fail("--image replaces the instance source");
        std::vector<uint64_t> residues =
            parse_u64_list(hausdorff_image, "residue");
        check(ssf_image_set_explicit(residues.data(), residues.size(),
                                     *hausdorff_src.modulus, lenient, &img));
      } else {
        InstanceGuard inst;
        inst.ptr = make_instance(hausdorff_src, caps);
        check(ssf_image_set(inst.ptr, lenient, &caps, &img));
      }
      if (ssf_image_boundary_warning(img))
        std::fprintf(stderr,
                     "warning: single-residue boundary gap; dimension bounds "
                     "assume the strict anchoring\n");
      if (hausdorff_digits) {
        ssf_strings* digits = nullptr;
        ssf_status st = ssf_attractor_digits(img, *hausdorff_digits, &caps,
                                             &digits);
        if (st != SSF_OK) {
          ssf_image_free(img);
          check(st);
        }
        std::string text;
        for (size_t i = 0; i < ssf_strings_count(digits); ++i) {
          text += ssf_strings_item(digits, i);
          text += '\n';
        }
        ssf_strings_free(digits);
        ssf_image_free(img);
        write_output(text, hausdorff_out);
      } else {
        char* text = nullptr;
        ssf_status st = ssf_hausdorff_json(img, &text);
        ssf_image_free(img);
        check(st);
        write_output(take(text), hausdorff_out);
      }
    } else if (app.got_subcommand(family_cmd)) {
      std::vector<uint64_t> sizes = parse_size_spec(family_sizes);
      double q;
      if (family_q == "-inf") q = -HUGE_VAL;
      else if (family_q == "+inf" || family_q == "inf") q = HUGE_VAL;
      else q = parse_real(family_q, "q");
      ssf_family* fam = nullptr;
      if (family_kind == "arithmetic")
        check(ssf_family_arithmetic(family_a, sizes.data(), sizes.size(), &fam));
      else if (family_kind == "random")
        check(ssf_family_random_density(family_rho, family_seed, sizes.data(),
                                        sizes.size(), &caps, &fam));
      else
        check(ssf_family_superincreasing(family_seed, sizes.data(),
                                         sizes.size(), &caps, &fam));
      ssf_family_estimate* est = nullptr;
      int method = family_method == "extrapolate" ? 1 : 0;
      ssf_status st = ssf_family_dimension(fam, q, method, &caps, &est);
      ssf_family_free(fam);
      check(st);
      for (size_t i = 0; i < ssf_family_estimate_warnings(est); ++i)
        std::fprintf(stderr, "warning: %s\n",
                     ssf_family_estimate_warning(est, i));
      char* text = nullptr;
      st = family_format == "json" ? ssf_family_estimate_json(est, &text)
                                   : ssf_family_estimate_csv(est, &text);
      ssf_family_estimate_free(est);
      check(st);
      write_output(take(text), family_out);
    } else if (app.got_subcommand(instance_cmd)) {
      InstanceGuard inst;
      inst.ptr = make_instance(instance_src, caps);
      char* text = nullptr;
      check(ssf_instance_json(inst.ptr, &text));
      write_output(take(text), instance_out);
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return 2;
  } catch (const StatusError& e) {
    std::fprintf(stderr, "error: %s (%s)\n", ssf_last_error(),
                 ssf_status_name(e.status));
    return exit_code_for(e.status);
  }
  return 0;
}
