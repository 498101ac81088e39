#pragma once

// Numeric verification of the quaternionic parallelization of the unit
// 3-sphere: the three tangent fields obtained by left multiplication by i,
// j, k, their orthonormality and orientation, their antipodal equivariance
// (which is what descends the frame to projective space), and Gram-Schmidt
// orthonormalization for frames given in general position.

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace stiefel::quatframe {

using Vec4 = std::array<double, 4>;

struct Quaternion {
    double x1 = 0; // coefficient of 1
    double x2 = 0; // i
    double x3 = 0; // j
    double x4 = 0; // k
};

Quaternion qmul(const Quaternion& p, const Quaternion& q);

struct Frame3 {
    Vec4 u1{};
    Vec4 u2{};
    Vec4 u3{};
};

// Defaults: frame checks at 1e-12, input unit-norm admission at 1e-9.
inline constexpr double default_tolerance = 1e-12;
inline constexpr double unit_norm_tolerance = 1e-9;

double dot(const Vec4& a, const Vec4& b);
double norm(const Vec4& a);

// The three linear tangent fields at x; identical arithmetic to
// qmul(i, x), qmul(j, x), qmul(k, x). Requires x on the unit sphere within
// unit_norm_tolerance.
Frame3 frame_at(const Vec4& x);

struct FrameDiagnostics {
    bool unit_input = false;            // norm within unit_norm_tolerance of 1
    double norm_error = 0;              // | ||x|| - 1 |
    double orthonormality_error = 0;    // max |u_i . u_j - delta_ij|
    double tangency_error = 0;          // max |u_i . x|
    double orientation_det = 0;         // det of columns [x, u1, u2, u3]

    bool pass(double tol) const;
};

// Evaluates the frame quality at x. Problems are reported in the
// diagnostics, not thrown; a non-unit x fails the unit_input field.
FrameDiagnostics check_frame(const Vec4& x, double tol = default_tolerance);

// True when the frame at -x is the componentwise negation of the frame at
// x, which holds identically because the fields are linear.
bool antipodal_check(const Vec4& x, double tol = default_tolerance);

class DegenerateFrame : public std::runtime_error {
  public:
    explicit DegenerateFrame(double gram_det)
        : std::runtime_error("input vectors are numerically dependent (Gram determinant " +
                             std::to_string(gram_det) + ")") {}
};

// Stabilized Gram-Schmidt: keeps the direction of v1 and the span of the
// inputs. Throws DegenerateFrame when the Gram determinant is at or below
// tol.
Frame3 gram_schmidt(const Vec4& v1, const Vec4& v2, const Vec4& v3,
                    double tol = default_tolerance);

// Deterministic unit-sphere sampler used by the self tests. Draws raw
// engine words and maps them to [-1,1] by ldexp so the stream is identical
// on every platform, then normalizes (rejecting near-zero draws).
Vec4 random_unit_point(std::mt19937_64& rng);

} // namespace stiefel::quatframe
