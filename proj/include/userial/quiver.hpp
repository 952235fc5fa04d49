#pragma once

#include <optional>
#include <string>
#include <vector>

#include "userial/errors.hpp"

namespace userial {

struct Arrow {
    std::string name;
    int src;  // vertex index
    int dst;
};

// Finite quiver: vertices carry user-facing names, arrows may be parallel.
class Quiver {
public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows);

    int num_vertices() const { return static_cast<int>(vertex_names_.size()); }
    int num_arrows() const { return static_cast<int>(arrows_.size()); }
    const std::string& vertex_name(int v) const { return vertex_names_[static_cast<std::size_t>(v)]; }
    const Arrow& arrow(int a) const { return arrows_[static_cast<std::size_t>(a)]; }
    std::optional<int> vertex_index(const std::string& name) const;
    std::optional<int> arrow_index(const std::string& name) const;
    const std::vector<int>& arrows_from(int v) const { return out_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& arrows_into(int v) const { return in_[static_cast<std::size_t>(v)]; }

    bool operator==(const Quiver&) const = default;

private:
    std::vector<std::string> vertex_names_;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

// Composable arrow sequence. Arrows are stored right-to-left: arrows()[0] is
// the last arrow traversed, arrows().back() the first, matching the product
// notation q p = "p then q". Length 0 is the stationary path at a vertex.
class Path {
public:
    Path() : source_(-1) {}
    static Path stationary(int vertex) {
        Path p;
        p.source_ = vertex;
        return p;
    }
    // `arrows_rtl` listed right-to-left; validated against q.
    static Path of_arrows(const Quiver& q, std::vector<int> arrows_rtl);
    static Path of_arrow(const Quiver& q, int arrow);

    int length() const { return static_cast<int>(arrows_.size()); }
    const std::vector<int>& arrows() const { return arrows_; }
    int source(const Quiver& q) const {
        return arrows_.empty() ? source_ : q.arrow(arrows_.back()).src;
    }
    int target(const Quiver& q) const {
        return arrows_.empty() ? source_ : q.arrow(arrows_.front()).dst;
    }
    // Vertices visited, source first; length() + 1 entries.
    std::vector<int> vertex_sequence(const Quiver& q) const;

    bool operator==(const Path& o) const = default;
    // Total order: length, then arrow ids right-to-left, then source vertex.
    bool operator<(const Path& o) const;

    std::string display(const Quiver& q) const;  // "b*a" style, right-to-left

private:
    int source_;  // meaningful only for stationary paths
    std::vector<int> arrows_;
};

// compose(q, p): traverse p, then q; requires t(p) = s(q).
Path compose(const Quiver& quiver, const Path& q, const Path& p);

// All r with p = r * u, i.e. the initial segments traversed first; length()+1
// of them, sharing the source of p.
std::vector<Path> right_subpaths(const Quiver& quiver, const Path& p);

// Detour (alpha, u) on p: alpha * u is a path not a right subpath of p, and
// some strictly longer right subpath of p ends at t(alpha). v_family collects
// all such subpaths (the family V(alpha, u), indices I(alpha, u)).
struct DetourData {
    int arrow;
    Path u;
    std::vector<Path> v_family;
};

std::vector<DetourData> detours(const Quiver& quiver, const Path& p);

// Route on p: starts at s(p), visits an in-order subsequence of p's vertex
// sequence and no other vertices.
bool is_route(const Quiver& quiver, const Path& q, const Path& p);

std::vector<Path> non_routes_up_to(const Quiver& quiver, const Path& p, int maxlen);

// All paths starting at v of length <= maxlen (stationary path included).
std::vector<Path> paths_from(const Quiver& quiver, int v, int maxlen);
// All paths in the quiver of length <= maxlen.
std::vector<Path> all_paths_up_to(const Quiver& quiver, int maxlen);

// The five contact classes of arrows relative to a mast p through distinct
// vertices 1..n (mast arrows excluded from D).
struct ArrowClassification {
    std::vector<int> B;        // start on 1..n-1, end off the mast
    std::vector<int> B_prime;  // start at n
    std::vector<int> C;        // start off the mast, end in 2..n
    std::vector<int> C_prime;  // end at 1
    std::vector<int> D;        // both ends on the mast, not a mast arrow
    std::vector<int> mast_vertices;  // vertex ids along p, index 0 = "1"
};

ArrowClassification classify_arrows(const Quiver& quiver, const Path& p);

bool has_oriented_cycle(const Quiver& quiver);
// True when some directed cycle passes through v.
bool lies_on_cycle(const Quiver& quiver, int v);

}  // namespace userial
