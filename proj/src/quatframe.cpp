#include "stiefel/quatframe.hpp"

#include <algorithm>
#include <cmath>

namespace stiefel::quatframe {

Quaternion qmul(const Quaternion& p, const Quaternion& q) {
    return Quaternion{
        p.x1 * q.x1 - p.x2 * q.x2 - p.x3 * q.x3 - p.x4 * q.x4,
        p.x1 * q.x2 + p.x2 * q.x1 + p.x3 * q.x4 - p.x4 * q.x3,
        p.x1 * q.x3 - p.x2 * q.x4 + p.x3 * q.x1 + p.x4 * q.x2,
        p.x1 * q.x4 + p.x2 * q.x3 - p.x3 * q.x2 + p.x4 * q.x1,
    };
}

double dot(const Vec4& a, const Vec4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

double norm(const Vec4& a) { return std::sqrt(dot(a, a)); }

namespace {

// The displayed linear fields, no input validation.
Frame3 frame_formula(const Vec4& x) {
    Frame3 f;
    f.u1 = {-x[1], x[0], -x[3], x[2]};
    f.u2 = {-x[2], x[3], x[0], -x[1]};
    f.u3 = {-x[3], -x[2], x[1], x[0]};
    return f;
}

double det4(const Vec4& c0, const Vec4& c1, const Vec4& c2, const Vec4& c3) {
    // Laplace expansion along the first column.
    const auto minor3 = [](double a, double b, double c, double d, double e, double f,
                           double g, double h, double i) {
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
    };
    double det = 0;
    const Vec4* cols[4] = {&c0, &c1, &c2, &c3};
    for (int r = 0; r < 4; ++r) {
        double m[3][3];
        for (int col = 1; col < 4; ++col) {
            int mr = 0;
            for (int row = 0; row < 4; ++row) {
                if (row == r) {
                    continue;
                }
                m[mr][col - 1] = (*cols[col])[row];
                ++mr;
            }
        }
        const double cofactor = minor3(m[0][0], m[0][1], m[0][2], m[1][0], m[1][1],
                                       m[1][2], m[2][0], m[2][1], m[2][2]);
        det += ((r % 2 == 0) ? 1.0 : -1.0) * (*cols[0])[r] * cofactor;
    }
    return det;
}

} // namespace

Frame3 frame_at(const Vec4& x) {
    const double err = std::abs(norm(x) - 1.0);
    if (!(err <= unit_norm_tolerance)) {
        throw std::invalid_argument("frame_at needs a unit vector; norm deviates by " +
                                    std::to_string(err));
    }
    return frame_formula(x);
}

bool FrameDiagnostics::pass(double tol) const {
    return unit_input && orthonormality_error <= tol && tangency_error <= tol &&
           std::abs(orientation_det - 1.0) <= tol;
}

FrameDiagnostics check_frame(const Vec4& x, double tol) {
    if (!(tol > 0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    FrameDiagnostics diag;
    diag.norm_error = std::abs(norm(x) - 1.0);
    diag.unit_input = diag.norm_error <= unit_norm_tolerance;

    const Frame3 f = frame_formula(x);
    const Vec4* u[3] = {&f.u1, &f.u2, &f.u3};
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
            const double expected = i == j ? 1.0 : 0.0;
            diag.orthonormality_error =
                std::max(diag.orthonormality_error, std::abs(dot(*u[i], *u[j]) - expected));
        }
        diag.tangency_error = std::max(diag.tangency_error, std::abs(dot(*u[i], x)));
    }
    diag.orientation_det = det4(x, f.u1, f.u2, f.u3);
    return diag;
}

bool antipodal_check(const Vec4& x, double tol) {
    if (!(tol > 0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    const Frame3 at_x = frame_at(x);
    const Frame3 at_minus = frame_at({-x[0], -x[1], -x[2], -x[3]});
    const Vec4* a[3] = {&at_x.u1, &at_x.u2, &at_x.u3};
    const Vec4* b[3] = {&at_minus.u1, &at_minus.u2, &at_minus.u3};
    for (int i = 0; i < 3; ++i) {
        for (int c = 0; c < 4; ++c) {
            if (std::abs((*b[i])[c] + (*a[i])[c]) > tol) {
                return false;
            }
        }
    }
    return true;
}

Frame3 gram_schmidt(const Vec4& v1, const Vec4& v2, const Vec4& v3, double tol) {
    const double g11 = dot(v1, v1), g12 = dot(v1, v2), g13 = dot(v1, v3);
    const double g22 = dot(v2, v2), g23 = dot(v2, v3), g33 = dot(v3, v3);
    const double gram = g11 * (g22 * g33 - g23 * g23) - g12 * (g12 * g33 - g23 * g13) +
                        g13 * (g12 * g23 - g22 * g13);
    if (!(gram > tol)) {
        throw DegenerateFrame(gram);
    }

    const auto scale = [](const Vec4& v, double s) {
        return Vec4{v[0] * s, v[1] * s, v[2] * s, v[3] * s};
    };
    const auto axpy = [](Vec4 v, double s, const Vec4& w) {
        for (int i = 0; i < 4; ++i) {
            v[i] -= s * w[i];
        }
        return v;
    };

    Frame3 f;
    f.u1 = scale(v1, 1.0 / norm(v1));
    Vec4 w2 = axpy(v2, dot(v2, f.u1), f.u1);
    f.u2 = scale(w2, 1.0 / norm(w2));
    Vec4 w3 = axpy(v3, dot(v3, f.u1), f.u1);
    w3 = axpy(w3, dot(w3, f.u2), f.u2);
    f.u3 = scale(w3, 1.0 / norm(w3));
    return f;
}

Vec4 random_unit_point(std::mt19937_64& rng) {
    // 53-bit mantissa draw in [0,1), shifted to [-1,1]; rejection keeps the
    // normalization well conditioned.
    const auto draw = [&rng] { return 2.0 * std::ldexp(static_cast<double>(rng() >> 11), -53) - 1.0; };
    while (true) {
        const Vec4 v{draw(), draw(), draw(), draw()};
        const double n = norm(v);
        if (n >= 0.1 && n <= 1.0) {
            return {v[0] / n, v[1] / n, v[2] / n, v[3] / n};
        }
    }
}

} // namespace stiefel::quatframe
