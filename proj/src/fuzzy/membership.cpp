#include "aesthetic/fuzzy/membership.hpp"

#include <cmath>
#include <string>

#include "aesthetic/errors.hpp"

namespace aesthetic::fuzzy {

TriangularMF::TriangularMF(double left, double peak, double right)
    : left_(left), peak_(peak), right_(right) {
  if (!std::isfinite(left) || !std::isfinite(peak) || !std::isfinite(right)) {
    throw ArgumentError("triangular MF parameters must be finite");
  }
  if (!(left <= peak && peak <= right)) {
    throw ArgumentError("triangular MF requires left <= peak <= right, got (" + std::to_string(left) + ", " +
                        std::to_string(peak) + ", " + std::to_string(right) + ")");
  }
}

double TriangularMF::operator()(double x) const noexcept {
  if (x == peak_) return 1.0;
  if (x <= left_ || x >= right_) return 0.0;
  if (x < peak_) return (x - left_) / (peak_ - left_);
  return (right_ - x) / (right_ - peak_);
}

}  // namespace aesthetic::fuzzy
