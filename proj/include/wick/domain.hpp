#pragma once

#include <map>
#include <vector>

#include "wick/lamination.hpp"

namespace wick {

struct Frame {
    enum class Kind { Face, Band, BoundaryBand };
    double T = 0;
    Vec3 N, r;
    Kind kind = Kind::Face;
    int face = -1;  // face of N (for Face), near face of the leaf otherwise
    int leaf = -1;  // weighted leaf (Band) or boundary index (BoundaryBand)
    double s = 0;   // band parameter in [0,1] measured from the basepoint side; arc length for boundary bands
};

struct FaceInfo {
    std::vector<int> sign;  // sign of <x, n_i> for each weighted leaf
    Vec3 rho = Vec3::Zero();
    std::vector<std::pair<double, double>> arcs;  // ideal boundary as (start, length)
    std::vector<int> boundary;                    // support boundary geodesics touching the face
};

struct AffineIsom {
    Mat3 linear = Mat3::Identity();
    Vec3 translation = Vec3::Zero();
    Vec3 apply(const Vec3& p) const { return linear * p + translation; }
    AffineIsom operator*(const AffineIsom& o) const { return {linear * o.linear, linear * o.translation + translation}; }
};

// The flat regular domain U^0 of a finite lamination with a chosen basepoint.
// Everything is precomputed in the constructor; queries are const.
class Domain {
public:
    Domain(Lamination lam, const Vec3& x0);

    const Lamination& lam() const { return lam_; }
    const Vec3& basepoint() const { return x0_; }
    const std::vector<FaceInfo>& faces() const { return faces_; }
    int base_face() const { return base_face_; }
    int near_face(int leaf) const { return near_[leaf]; }
    int far_face(int leaf) const { return far_[leaf]; }
    Vec3 leaf_normal(int leaf) const { return oriented_[leaf]; }  // points away from the basepoint
    int boundary_face(int b) const { return bface_[b]; }

    int face_of(const Vec3& x) const;  // -1 when x lies on a weighted leaf
    Vec3 rho(const Vec3& x) const;
    std::pair<Vec3, Vec3> rho_pm(int leaf) const;  // (basepoint side, far side)

    Vec3 embed(const Vec3& x, double a) const;
    Vec3 embed_band(int leaf, double t, double a, double s) const;  // t = arc length along the leaf
    Frame ct_frame(const Vec3& p) const;
    bool contains(const Vec3& p) const;

private:
    std::vector<int> signs(const Vec3& x, bool strict) const;

    Lamination lam_;
    Vec3 x0_;
    std::vector<FaceInfo> faces_;
    std::map<std::vector<int>, int> index_;
    std::vector<Vec3> oriented_;
    std::vector<int> near_, far_, bface_;
    int base_face_ = 0;
};

struct SingularityTree {
    struct Edge {
        int a, b, leaf;
        double length;
    };
    std::vector<Vec3> vertices;
    std::vector<Edge> edges;
    double delta(int i, int j) const;
};
SingularityTree singularity_tree(const Domain& dom);

AffineIsom flat_holonomy(const Domain& dom, const Mat3& gamma);

}  // namespace wick
