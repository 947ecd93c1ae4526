#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssfractal/caps.hpp"
#include "ssfractal/instance.hpp"

namespace ssf {

// How the image set is anchored inside a complete residue system.  Strict
// mode requires two consecutive absent residues (the rotated window then has
// both endpoints unoccupied); lenient mode falls back to a single absent
// residue placed at the top of the window and flags the result.
enum class BoundaryMode { Strict, Lenient };

// The image A' of an injective, non-surjective instance, rotated so that the
// representative window [c_min, c_min + A - 1] has unoccupied endpoints
// (both in strict mode, at least the top one in lenient mode).  Among the
// admissible anchors the smallest c_min in [0, A) is chosen.
class ImageSet {
 public:
  uint64_t modulus() const { return modulus_; }
  uint64_t c_min() const { return c_min_; }
  bool boundary_warning() const { return warning_; }
  size_t size() const { return residues_.size(); }

  // Residues reduced into [0, A), ascending.
  const std::vector<uint64_t>& residues() const { return residues_; }
  // The same points as integers in the anchored window, ascending.
  std::vector<uint64_t> anchored() const;

 private:
  ImageSet() = default;
  static ImageSet anchor(std::vector<uint64_t> residues, uint64_t modulus,
                         BoundaryMode mode);
  uint64_t modulus_ = 0;
  uint64_t c_min_ = 0;
  bool warning_ = false;
  std::vector<uint64_t> residues_;

  friend ImageSet image_set(const Instance&, BoundaryMode, const Caps&);
  friend ImageSet image_set_explicit(const std::vector<uint64_t>&, uint64_t,
                                     BoundaryMode);
};

ImageSet image_set(const Instance& inst, BoundaryMode mode,
                   const Caps& caps = Caps{});
ImageSet image_set_explicit(const std::vector<uint64_t>& residues,
                            uint64_t modulus, BoundaryMode mode);

// Maximal runs of consecutive integers in the anchored window.  n is the
// total point count, n_prime the number of runs.
struct Component {
  uint64_t start = 0;  // anchored coordinate of the first point
  uint64_t size = 0;   // run length b_c >= 1
};

struct ComponentDecomposition {
  std::vector<Component> components;  // ascending by start
  uint64_t n = 0;
  uint64_t n_prime = 0;
};

ComponentDecomposition components(const ImageSet& img);

// The similarity dimension t of the self-similar set built from the runs:
// the unique root of sum_c (b_c / A)^t = 1, bracketed by
// log(n') / log(A) <= t <= log(n) / log(A) and found by bisection.
struct DimensionReport {
  double t = 0.0;
  double lower = 0.0;     // log(n') / log(A)
  double upper = 0.0;     // log(n) / log(A)
  double residual = 0.0;  // |sum_c (b_c/A)^t - 1| at the returned t
  unsigned iterations = 0;
};

DimensionReport similarity_dimension(const ComponentDecomposition& dec,
                                     uint64_t modulus);

// All |A'|^depth digit strings of the given depth over the image alphabet,
// in lexicographic order.  Each string is the base-A digit prefix of a point
// of the attractor.  Digits are joined with '.' when A > 10.
std::vector<std::string> attractor_digits(const ImageSet& img, unsigned depth,
                                          const Caps& caps = Caps{});

std::string hausdorff_report_json(const ImageSet& img);

}  // namespace ssf
