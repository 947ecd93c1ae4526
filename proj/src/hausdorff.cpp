#include "ssfractal/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ssfractal/errors.hpp"
#include "ssfractal/multiplicity.hpp"
#include "src/format_util.hpp"

namespace ssf {

namespace {

// Finds the smallest admissible anchor c_min in [0, A).  Scans the maximal
// blocks of absent residues between consecutive present ones; a block of
// length >= 2 admits an anchor with both window endpoints absent, a block of
// length 1 only the weaker single-endpoint anchor.
struct AnchorScan {
  bool has_strict = false;
  uint64_t strict_c_min = 0;
  bool has_lenient = false;
  uint64_t lenient_c_min = 0;
};

AnchorScan scan_anchors(const std::vector<uint64_t>& sorted_residues,
                        uint64_t modulus) {
  AnchorScan scan;
  size_t k = sorted_residues.size();
  auto consider_strict = [&](uint64_t v) {
    if (!scan.has_strict || v < scan.strict_c_min) {
      scan.has_strict = true;
      scan.strict_c_min = v;
    }
  };
  auto consider_lenient = [&](uint64_t v) {
    if (!scan.has_lenient || v < scan.lenient_c_min) {
      scan.has_lenient = true;
      scan.lenient_c_min = v;
    }
  };
  for (size_t i = 0; i < k; ++i) {
    uint64_t cur = sorted_residues[i];
    uint64_t next = i + 1 < k ? sorted_residues[i + 1]
                              : sorted_residues[0] + modulus;
    uint64_t gap = next - cur - 1;  // absent residues strictly between
    if (gap == 0) continue;
    if (gap == 1) {
      uint64_t v = cur + 2;  // window top lands on the absent residue
      consider_lenient(v >= modulus ? v - modulus : v);
      continue;
    }
    // Anchors with both endpoints absent form the range [cur+2, next-1];
    // the smallest value mod A is 0 if the range crosses A, else its left
    // end (reduced).
    uint64_t lo = cur + 2, hi = next - 1;
    uint64_t best;
    if (hi < modulus) best = lo;
    else if (lo >= modulus) best = lo - modulus;
    else best = 0;
    consider_strict(best);
  }
  return scan;
}

}  // namespace

ImageSet ImageSet::anchor(std::vector<uint64_t> residues, uint64_t modulus,
                          BoundaryMode mode) {
  std::sort(residues.begin(), residues.end());
  if (residues.size() == modulus)
    fail(ErrorCode::Surjective,
         "the image covers every residue; no unoccupied boundary exists");
  AnchorScan scan = scan_anchors(residues, modulus);
  ImageSet img;
  img.modulus_ = modulus;
  img.residues_ = std::move(residues);
  if (scan.has_strict) {
    img.c_min_ = scan.strict_c_min;
    img.warning_ = false;
    return img;
  }
  if (mode == BoundaryMode::Strict)
    fail(ErrorCode::NoBoundaryGap,
         "no two consecutive residues are absent; strict anchoring is "
         "impossible");
  if (!scan.has_lenient)
    throw std::logic_error("non-surjective image has no absent residue");
  img.c_min_ = scan.lenient_c_min;
  img.warning_ = true;
  return img;
}

std::vector<uint64_t> ImageSet::anchored() const {
  std::vector<uint64_t> out;
  out.reserve(residues_.size());
  for (uint64_t r : residues_) out.push_back(r >= c_min_ ? r : r + modulus_);
  std::sort(out.begin(), out.end());
  return out;
}

ImageSet image_set(const Instance& inst, BoundaryMode mode, const Caps& caps) {
  size_t s = inst.size();
  uint64_t modulus = inst.modulus();
  // More vectors than residues forces a collision outright.
  if (s >= 64 || (uint64_t(1) << s) > modulus)
    fail(ErrorCode::NotInjective,
         "2^s exceeds the modulus, so the map cannot be injective");
  std::vector<uint64_t> residues;
  if (modulus <= caps.modulus) {
    MultiplicityVector mv = multiplicity_dp(inst, caps);
    if (mv.max_count() > 1)
      fail(ErrorCode::NotInjective,
           "some residue has " + to_decimal(mv.max_count()) + " preimages");
    residues = mv.support();
  } else if (s <= caps.brute_force) {
    residues.reserve(size_t(1) << s);
    for (uint64_t mask = 0; mask < (uint64_t(1) << s); ++mask)
      residues.push_back(inst.apply_mask(mask));
    std::sort(residues.begin(), residues.end());
    if (std::adjacent_find(residues.begin(), residues.end()) != residues.end())
      fail(ErrorCode::NotInjective, "two subsets share a residue");
  } else {
    fail(ErrorCode::InstanceTooLarge,
         "neither the counting nor the enumeration route fits the caps");
  }
  return ImageSet::anchor(std::move(residues), modulus, mode);
}

ImageSet image_set_explicit(const std::vector<uint64_t>& residues,
                            uint64_t modulus, BoundaryMode mode) {
  if (modulus < 2)
    fail(ErrorCode::DegenerateModulus,
         "modulus must be at least 2, got " + std::to_string(modulus));
  if (residues.empty())
    fail(ErrorCode::InvalidArgument, "the residue set is empty");
  std::vector<uint64_t> sorted = residues;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.back() >= modulus)
    fail(ErrorCode::InvalidArgument,
         "residue " + std::to_string(sorted.back()) + " outside [0, " +
             std::to_string(modulus) + ")");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorCode::InvalidArgument, "residues must be distinct");
  return ImageSet::anchor(std::move(sorted), modulus, mode);
}

ComponentDecomposition components(const ImageSet& img) {
  ComponentDecomposition dec;
  std::vector<uint64_t> pts = img.anchored();
  size_t i = 0;
  while (i < pts.size()) {
    size_t j = i;
    while (j + 1 < pts.size() && pts[j + 1] == pts[j] + 1) ++j;
    dec.components.push_back({pts[i], j - i + 1});
    i = j + 1;
  }
  dec.n = pts.size();
  dec.n_prime = dec.components.size();
  return dec;
}

DimensionReport similarity_dimension(const ComponentDecomposition& dec,
                                     uint64_t modulus) {
  if (modulus < 2)
    fail(ErrorCode::DegenerateModulus,
         "modulus must be at least 2, got " + std::to_string(modulus));
  if (dec.components.empty())
    fail(ErrorCode::InvalidArgument, "the decomposition has no components");
  if (dec.n_prime != dec.components.size())
    fail(ErrorCode::InvalidArgument, "component count does not match n'");
  uint64_t total = 0;
  for (const Component& c : dec.components) {
    if (c.size < 1)
      fail(ErrorCode::InvalidArgument, "components must be nonempty");
    if (c.size >= modulus)
      fail(ErrorCode::InvalidArgument,
           "component of size " + std::to_string(c.size) +
               " is not smaller than the modulus");
    total += c.size;
  }
  if (total != dec.n)
    fail(ErrorCode::InvalidArgument, "component sizes do not sum to n");

  double ln_modulus = std::log(double(modulus));
  DimensionReport rep;
  rep.lower = std::log(double(dec.n_prime)) / ln_modulus;
  rep.upper = std::log(double(dec.n)) / ln_modulus;

  if (dec.n_prime == 1) {
    // One component: the contraction sum is (b/A)^t, which hits 1 exactly at
    // t = 0.
    rep.t = 0.0;
    rep.residual = 0.0;
    rep.iterations = 0;
    return rep;
  }

  // Group equal component sizes so the contraction sum costs one exp per
  // distinct size.
  std::vector<std::pair<double, double>> terms;  // (ln(b/A), count)
  {
    std::vector<uint64_t> sizes;
    sizes.reserve(dec.components.size());
    for (const Component& c : dec.components) sizes.push_back(c.size);
    std::sort(sizes.begin(), sizes.end());
    size_t i = 0;
    while (i < sizes.size()) {
      size_t j = i;
      while (j < sizes.size() && sizes[j] == sizes[i]) ++j;
      terms.emplace_back(std::log(double(sizes[i])) - std::log(double(modulus)),
                         double(j - i));
      i = j;
    }
  }
  auto excess = [&](double t) -> long double {  // sum (b/A)^t - 1, decreasing
    long double acc = -1.0L;
    for (const auto& [lnr, cnt] : terms)
      acc += (long double)cnt * expl((long double)t * (long double)lnr);
    return acc;
  };

  double lo = 0.0, hi = rep.upper + 1.0;
  unsigned iterations = 0;
  while (iterations < 200) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    ++iterations;
    if (excess(mid) > 0) lo = mid;
    else hi = mid;
  }
  long double f_lo = excess(lo);
  long double f_hi = -excess(hi);
  rep.t = f_lo <= f_hi ? lo : hi;
  rep.residual = double(f_lo <= f_hi ? f_lo : f_hi);
  rep.iterations = iterations;
  if (rep.t < rep.lower - 1e-12 || rep.t > rep.upper + 1e-12)
    throw std::logic_error("similarity dimension escaped its bracket");
  return rep;
}

std::vector<std::string> attractor_digits(const ImageSet& img, unsigned depth,
                                          const Caps& caps) {
  if (depth < 1) fail(ErrorCode::InvalidArgument, "depth must be at least 1");
  const std::vector<uint64_t>& alphabet = img.residues();
  // Count the output strings up front; overflow or a breach of the cap both
  // reject the request.
  uint64_t count = 1;
  uint64_t base = alphabet.size();
  for (unsigned i = 0; i < depth; ++i) {
    if (base > 1 && count > caps.attractor_outputs / base)
      fail(ErrorCode::OutputTooLarge,
           "|image|^depth exceeds the output cap " +
               std::to_string(caps.attractor_outputs));
    count *= base;
  }
  if (count > caps.attractor_outputs)
    fail(ErrorCode::OutputTooLarge,
         "|image|^depth exceeds the output cap " +
             std::to_string(caps.attractor_outputs));

  bool compact = img.modulus() <= 10;
  std::vector<std::string> out;
  out.reserve(count);
  std::vector<size_t> odo(depth, 0);
  for (uint64_t k = 0; k < count; ++k) {
    std::string str;
    for (unsigned d = 0; d < depth; ++d) {
      if (compact) {
        str += char('0' + int(alphabet[odo[d]]));
      } else {
        if (d) str += '.';
        str += std::to_string(alphabet[odo[d]]);
      }
    }
    out.push_back(std::move(str));
    for (unsigned d = depth; d-- > 0;) {
      if (++odo[d] < alphabet.size()) break;
      odo[d] = 0;
    }
  }
  return out;
}

std::string hausdorff_report_json(const ImageSet& img) {
  ComponentDecomposition dec = components(img);
  DimensionReport rep = similarity_dimension(dec, img.modulus());
  std::string out = "{\"t\":" + detail::fmt_real(rep.t) +
                    ",\"lower\":" + detail::fmt_real(rep.lower) +
                    ",\"upper\":" + detail::fmt_real(rep.upper) +
                    ",\"residual\":" + detail::fmt_real(rep.residual) +
                    ",\"components\":[";
  for (size_t i = 0; i < dec.components.size(); ++i) {
    if (i) out += ',';
    out += "[" + std::to_string(dec.components[i].start) + "," +
           std::to_string(dec.components[i].size) + "]";
  }
  out += "]}\n";
  return out;
}

}  // namespace ssf
