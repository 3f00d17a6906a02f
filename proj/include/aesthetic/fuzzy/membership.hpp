#pragma once

namespace aesthetic::fuzzy {

/// Triangular membership function with left foot, peak and right foot.
///
/// Shoulders are allowed (left == peak or peak == right); the flat end then
/// evaluates to 1 exactly at the peak. Outside the open support (left, right)
/// the degree is 0 except at the peak itself.
class TriangularMF {
 public:
  /// Throws ArgumentError unless left <= peak <= right.
  TriangularMF(double left, double peak, double right);

  double operator()(double x) const noexcept;

  double left() const noexcept { return left_; }
  double peak() const noexcept { return peak_; }
  double right() const noexcept { return right_; }

  bool operator==(const TriangularMF&) const = default;

 private:
  double left_;
  double peak_;
  double right_;
};

inline double membership(const TriangularMF& mf, double x) noexcept { return mf(x); }

}  // namespace aesthetic::fuzzy
