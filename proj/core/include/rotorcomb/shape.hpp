#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "rotorcomb/geometry.hpp"

namespace rotorcomb {

/// Tooth-height profile h : N0 -> N0. The two built-in profiles are
/// `cluster` (floor((x+1)^2/3), the aggregation cluster shape) and
/// `square` (x^2, the uniform-harmonic-measure shape); arbitrary tables
/// are accepted for experiments.
class Profile {
  public:
    static Profile cluster();
    static Profile square();
    static Profile table(std::vector<std::int64_t> heights, std::string name = "table");
    /// Parse "cluster", "square" or "file:<path>" (one height per line, or
    /// "x,h" rows).
    static Profile parse(const std::string& spec);

    std::int64_t operator()(std::int64_t x) const { return fn_(x); }
    const std::string& name() const { return name_; }

  private:
    Profile(std::string name, std::function<std::int64_t(std::int64_t)> fn)
        : name_(std::move(name)), fn_(std::move(fn)) {}

    std::string name_;
    std::function<std::int64_t(std::int64_t)> fn_;
};

/// The symmetric comb region B_m: all (x,y) with |x| <= m and
/// |y| <= h(m - |x|).
class ClusterShape {
  public:
    ClusterShape(std::int64_t m, Profile h);

    std::int64_t m() const { return m_; }
    const Profile& profile() const { return h_; }

    bool contains(const VertexC2& v) const;

    /// Every vertex of the shape, sorted.
    std::vector<VertexC2> vertices() const;

    /// Vertices of the shape with at least one neighbour outside it.
    std::set<VertexC2> inner_boundary() const;

    std::int64_t size() const;

  private:
    std::int64_t m_;
    Profile h_;
};

/// floor((x+1)^2 / 3), the tooth-height profile of the aggregation cluster.
std::int64_t h_cluster(std::int64_t x);

/// |B_m| for the cluster profile, by the closed form
/// (4m^3 + 12m^2 + 24m + 5 + 2((m+2) mod 3)) / 9.
std::int64_t cardinality_Bm(std::int64_t m);

}  // namespace rotorcomb
