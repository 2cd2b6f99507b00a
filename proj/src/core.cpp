#include "wick/core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace wick {

namespace {
constexpr double kPi = std::numbers::pi;
// orientation of the x3 axis inside the Hermitian model; pinned so that the
// bending cocycle rotates the far half-plane away from the positive normal e3
constexpr double kHermSign = 1.0;

double clamp1(double x) { return std::max(-1.0, std::min(1.0, x)); }
}  // namespace

double mink(const Vec3& u, const Vec3& v) { return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Mat3 eta3() { return Eigen::Vector3d(-1, 1, 1).asDiagonal(); }

bool is_h2(const Vec3& v, double tol) { return std::abs(mink(v, v) + 1.0) <= tol && v[0] > 0; }

Vec3 to_h2(const Vec3& v) {
    double q = -mink(v, v);
    if (!(q > 0) || v[0] <= 0) throw Error("NotTimelike", "vector is not future timelike");
    return v / std::sqrt(q);
}

Vec3 h2_polar(double r, double phi) {
    return {std::cosh(r), std::sinh(r) * std::cos(phi), std::sinh(r) * std::sin(phi)};
}

// <x-y,x-y> = 4 sh^2(d/2): accurate for nearby points as well
double h2_distance(const Vec3& x, const Vec3& y) {
    Vec3 d = x - y;
    return 2 * std::asinh(std::sqrt(std::max(0.0, mink(d, d))) / 2);
}

double norm_angle(double t) {
    double r = std::fmod(t, 2 * kPi);
    if (r < 0) r += 2 * kPi;
    if (r >= 2 * kPi) r = 0;
    return r;
}

Vec3 ideal(double theta) { return {1.0, std::cos(theta), std::sin(theta)}; }

double ideal_angle(const Vec3& v) { return norm_angle(std::atan2(v[2], v[1])); }

Geodesic geodesic(double a, double b) {
    double d = norm_angle(a - b);
    if (d < 1e-12 || 2 * kPi - d < 1e-12) throw Error("CoincidentEndpoints", "geodesic needs distinct endpoints");
    Vec3 c = ideal(a).cross(ideal(b));
    Vec3 n = eta3() * c;
    return {n / std::sqrt(mink(n, n))};
}

Geodesic geodesic_from_normal(const Vec3& n) {
    double q = mink(n, n);
    if (!(q > 0)) throw Error("NullInput", "normal is not spacelike");
    return {n / std::sqrt(q)};
}

std::pair<double, double> Geodesic::ends() const {
    double R = std::hypot(n[1], n[2]);
    double phi = std::atan2(n[2], n[1]);
    double d = std::acos(clamp1(n[0] / R));
    double a = phi - d, b = phi + d;
    Mat3 M;
    M.row(0) = ideal(a);
    M.row(1) = ideal(b);
    M.row(2) = n;
    if (M.determinant() < 0) std::swap(a, b);
    return {norm_angle(a), norm_angle(b)};
}

Vec3 Geodesic::foot() const {
    Vec3 q = Vec3(1, 0, 0) + n[0] * n;
    return to_h2(q);
}

Vec3 Geodesic::tangent() const {
    Vec3 m = foot();
    Vec3 xp = ideal(ends().second);
    return -xp / mink(xp, m) - m;
}

Mat2 Jm() {
    Mat2 J;
    J << 0, 1, -1, 0;
    return J;
}

Mat2 sym_of(const Vec3& x) {
    Mat2 S;
    S << x[0] + x[2], x[1], x[1], x[0] - x[2];
    return S;
}

Vec3 from_sym(const Mat2& S) {
    return {(S(0, 0) + S(1, 1)) / 2, (S(0, 1) + S(1, 0)) / 2, (S(0, 0) - S(1, 1)) / 2};
}

Mat2 mink_to_sl2(const Vec3& x) { return sym_of(x) * Jm(); }

Vec3 sl2_to_mink(const Mat2& X) { return from_sym(-X * Jm()); }

Mat2c mat_exp(const Mat2c& X) {
    // X^2 = -det(X) Id for traceless X
    cd d = -X.determinant();
    cd s = std::sqrt(d);
    cd ch, shs;
    if (std::abs(s) < 1e-6) {
        ch = 1.0 + d / 2.0 + d * d / 24.0;
        shs = 1.0 + d / 6.0 + d * d / 120.0;
    } else {
        ch = std::cosh(s);
        shs = std::sinh(s) / s;
    }
    Mat2c out = ch * Mat2c::Identity() + shs * X;
    cd det = out.determinant();
    return out / std::sqrt(det);
}

Mat2 mat_exp(const Mat2& X) { return mat_exp(to_c(X)).real(); }

Mat3 so21(const Mat2& A) {
    Mat3 M;
    for (int k = 0; k < 3; ++k) M.col(k) = from_sym(A * sym_of(Vec3::Unit(k)) * A.transpose());
    return M;
}

Vec3 act(const Mat2& A, const Vec3& x) { return from_sym(A * sym_of(x) * A.transpose()); }

Mat2 move_to(const Vec3& p) {
    Mat2 S = sym_of(p);
    return (S + Mat2::Identity()) / std::sqrt(S.trace() + 2.0);
}

Mat2 pi_rotation(const Vec3& p) { return -sym_of(p) * Jm(); }

Vec2 ideal_vec(double theta) { return {std::cos(kPi / 4 - theta / 2), std::sin(kPi / 4 - theta / 2)}; }

double vec_angle(const Vec2& v) {
    Vec3 x = from_sym(v * v.transpose());
    return norm_angle(std::atan2(x[2], x[1]));
}

double act_ideal(const Mat2& A, double theta) { return vec_angle(A * ideal_vec(theta)); }

double translation_length(const Mat2& A) {
    double t = std::abs(A.trace());
    if (t < 2.0 - 1e-12) throw Error("Elliptic", "|trace| < 2");
    return 2.0 * std::acosh(std::max(1.0, t / 2.0));
}

Mat2 boost_along(const Geodesic& g, double t) { return mat_exp(Mat2(0.5 * t * mink_to_sl2(g.n))); }

Mat2 rotation_at(const Vec3& p, double angle) { return mat_exp(Mat2(0.5 * angle * mink_to_sl2(p))); }

namespace {
template <class M>
M normalize_sign(M A) {
    double best = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) best = std::max(best, std::abs(A(i, j)));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (std::abs(A(i, j)) >= best * (1 - 1e-12)) {
                auto v = A(i, j);
                double re = std::real(v);
                double key = std::abs(re) > 1e-14 * best ? re : std::imag(v);
                if (key < 0) A = -A;
                return A;
            }
        }
    return A;
}
}  // namespace

Mat2c proj_normalize(Mat2c A) { return normalize_sign(A); }
Mat2 proj_normalize(Mat2 A) { return normalize_sign(A); }

double proj_dist(const Mat2c& A, const Mat2c& B) { return std::min((A - B).norm(), (A + B).norm()); }
double proj_dist(const Mat2& A, const Mat2& B) { return std::min((A - B).norm(), (A + B).norm()); }

Mat2c to_c(const Mat2& A) { return A.cast<cd>(); }

Mat2 adj(const Mat2& X) {
    Mat2 a;
    a << X(1, 1), -X(0, 1), -X(1, 0), X(0, 0);
    return a;
}

double ads_form(const Mat2& X, const Mat2& Y) { return -0.5 * (X * adj(Y)).trace(); }

double pair_dist(const IsomPair& a, const IsomPair& b) {
    // the pair is defined up to a common sign
    double s = (a.left - b.left).norm() + (a.right - b.right).norm();
    double m = (a.left + b.left).norm() + (a.right + b.right).norm();
    double mixed1 = (a.left - b.left).norm() + (a.right + b.right).norm();
    double mixed2 = (a.left + b.left).norm() + (a.right - b.right).norm();
    return std::min({s, m, mixed1, mixed2});
}

AdsLine dual_line(const AdsLine& l) {
    if (std::abs(ads_form(l.P, l.P) + 1) > 1e-9 || std::abs(ads_form(l.V, l.V) - 1) > 1e-9 ||
        std::abs(ads_form(l.P, l.V)) > 1e-9)
        throw Error("NullInput", "line must be given by a unit timelike point and unit spacelike tangent");
    std::vector<Mat2> comp;
    for (int k = 0; k < 4; ++k) {
        Mat2 B = Mat2::Zero();
        B(k / 2, k % 2) = 1;
        B += ads_form(B, l.P) * l.P;
        B -= ads_form(B, l.V) * l.V;
        for (const auto& C : comp) B -= C * (C.cwiseProduct(B).sum() / C.squaredNorm());
        if (B.norm() > 1e-8) comp.push_back(B);
        if (comp.size() == 2) break;
    }
    Mat2 G;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) G(i, j) = ads_form(comp[i], comp[j]);
    Eigen::SelfAdjointEigenSolver<Mat2> es(G);
    Vec2 ut = es.eigenvectors().col(0), us = es.eigenvectors().col(1);
    Mat2 P = ut[0] * comp[0] + ut[1] * comp[1];
    Mat2 V = us[0] * comp[0] + us[1] * comp[1];
    P /= std::sqrt(-ads_form(P, P));
    V /= std::sqrt(ads_form(V, V));
    return {proj_normalize(P), V};
}

Mat2 dual_point_of_plane(const Mat2& x) { return proj_normalize(Mat2(x)); }

std::pair<ProdPoint, ProdPoint> dual_endpoints(const ProdPoint& xm, const ProdPoint& xp) {
    return {{xm.first, xp.second}, {xp.first, xm.second}};
}

Mat2 boundary_embed_vec(const Vec2& v, const Vec2& w) {
    Mat2 E;
    E << 0, -1, 1, 0;
    return v * (E * w).transpose();
}

Mat2 boundary_embed(double xiL, double xiR) { return boundary_embed_vec(ideal_vec(xiL), ideal_vec(xiR)); }

ProdPoint boundary_inverse(const Mat2& M) {
    Vec2 a = M.col(0).norm() >= M.col(1).norm() ? Vec2(M.col(0)) : Vec2(M.col(1));
    Vec2 b = M.row(0).norm() >= M.row(1).norm() ? Vec2(M.row(0).transpose()) : Vec2(M.row(1).transpose());
    Mat2 Einv;
    Einv << 0, 1, -1, 0;
    return {vec_angle(a), vec_angle(Einv * b)};
}

IsomPair rotation_about(const Mat2& x) {
    if (std::abs(x.trace()) < 2.0 - 1e-12) throw Error("NotHyperbolic", "rotation axis needs a hyperbolic class");
    return {x, x.inverse()};
}

double plane_angle(const Mat2& x1, const Mat2& x2) { return std::acosh(std::max(1.0, std::abs(ads_form(x1, x2)))); }

double mink4(const Vec4& u, const Vec4& v) { return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2] + u[3] * v[3]; }

Vec4 embed4(const Vec3& x) { return {x[0], x[1], x[2], 0.0}; }

Mat2c herm(const Vec4& x) {
    Mat2c H;
    H << cd(x[0] + x[2], 0), cd(x[1], kHermSign * x[3]), cd(x[1], -kHermSign * x[3]), cd(x[0] - x[2], 0);
    return H;
}

Vec4 from_herm(const Mat2c& H) {
    return {std::real(H(0, 0) + H(1, 1)) / 2, std::real(H(0, 1) + H(1, 0)) / 2, std::real(H(0, 0) - H(1, 1)) / 2,
            kHermSign * std::imag(H(0, 1) - H(1, 0)) / 2};
}

Mat4 so31(const Mat2c& A) {
    Mat4 M;
    for (int k = 0; k < 4; ++k) M.col(k) = from_herm(A * herm(Vec4::Unit(k)) * A.adjoint());
    return M;
}

Vec4 halfspace_to_hyperboloid(cd w, double c) {
    Mat2c H;
    H << c + std::norm(w) / c, w / c, std::conj(w) / c, 1.0 / c;
    return from_herm(H);
}

std::pair<cd, double> hyperboloid_to_halfspace(const Vec4& x) {
    Mat2c H = herm(x);
    double c = 1.0 / std::real(H(1, 1));
    return {H(0, 1) * c, c};
}

Vec4 ds_normalize(Vec4 v) {
    int k = 0;
    for (int i = 1; i < 4; ++i)
        if (std::abs(v[i]) > std::abs(v[k]) * (1 + 1e-12)) k = i;
    return v[k] < 0 ? Vec4(-v) : v;
}

double h3_distance(const Vec4& x, const Vec4& y) {
    Vec4 d = x - y;
    return 2 * std::asinh(std::sqrt(std::max(0.0, mink4(d, d))) / 2);
}

Vec4 ds_exp(const Vec4& x, const Vec4& v, double t) {
    double scale = std::max(1.0, x.norm() * v.norm());
    if (std::abs(mink4(x, v)) > 1e-10 * scale) throw Error("BadTangent", "tangent not orthogonal to point");
    double q = mink4(v, v);
    if (std::abs(q) < 1e-14) return x + t * v;
    double s = std::sqrt(std::abs(q));
    Vec4 u = v / s;
    return q > 0 ? Vec4(std::cos(t * s) * x + std::sin(t * s) * u) : Vec4(std::cosh(t * s) * x + std::sinh(t * s) * u);
}

Mat2 ads_exp(const Mat2& X, const Mat2& V, double t) {
    double scale = std::max(1.0, X.norm() * V.norm());
    if (std::abs(ads_form(X, V)) > 1e-10 * scale) throw Error("BadTangent", "tangent not orthogonal to point");
    double q = ads_form(V, V);
    if (std::abs(q) < 1e-14) return X + t * V;
    double s = std::sqrt(std::abs(q));
    Mat2 U = V / s;
    return q < 0 ? Mat2(std::cos(t * s) * X + std::sin(t * s) * U) : Mat2(std::cosh(t * s) * X + std::sinh(t * s) * U);
}

}  // namespace wick
