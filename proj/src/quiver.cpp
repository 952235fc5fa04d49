#include "userial/quiver.hpp"

#include <algorithm>
#include <set>

namespace userial {

Quiver::Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows)
    : vertex_names_(std::move(vertex_names)), arrows_(std::move(arrows)) {
    std::set<std::string> vnames(vertex_names_.begin(), vertex_names_.end());
    if (vnames.size() != vertex_names_.size()) throw Error("duplicate vertex name");
    std::set<std::string> anames;
    out_.resize(vertex_names_.size());
    in_.resize(vertex_names_.size());
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        const Arrow& a = arrows_[i];
        if (!anames.insert(a.name).second) throw Error("duplicate arrow id '" + a.name + "'");
        if (a.src < 0 || a.src >= num_vertices() || a.dst < 0 || a.dst >= num_vertices())
            throw Error("arrow '" + a.name + "' references an undeclared vertex");
        out_[static_cast<std::size_t>(a.src)].push_back(static_cast<int>(i));
        in_[static_cast<std::size_t>(a.dst)].push_back(static_cast<int>(i));
    }
}

std::optional<int> Quiver::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertex_names_.size(); ++i)
        if (vertex_names_[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

std::optional<int> Quiver::arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].name == name) return static_cast<int>(i);
    return std::nullopt;
}

Path Path::of_arrows(const Quiver& q, std::vector<int> arrows_rtl) {
    if (arrows_rtl.empty()) throw Error("Path::of_arrows needs at least one arrow");
    for (std::size_t i = 0; i + 1 < arrows_rtl.size(); ++i) {
        // arrows_rtl[i] is applied after arrows_rtl[i+1]
        if (q.arrow(arrows_rtl[i]).src != q.arrow(arrows_rtl[i + 1]).dst)
            throw CompositionError("arrows '" + q.arrow(arrows_rtl[i + 1]).name + "' and '" +
                                   q.arrow(arrows_rtl[i]).name + "' do not compose");
    }
    Path p;
    p.source_ = q.arrow(arrows_rtl.back()).src;
    p.arrows_ = std::move(arrows_rtl);
    return p;
}

Path Path::of_arrow(const Quiver& q, int arrow) { return of_arrows(q, {arrow}); }

std::vector<int> Path::vertex_sequence(const Quiver& q) const {
    std::vector<int> seq;
    seq.push_back(source(q));
    for (auto it = arrows_.rbegin(); it != arrows_.rend(); ++it) seq.push_back(q.arrow(*it).dst);
    return seq;
}

bool Path::operator<(const Path& o) const {
    if (arrows_.size() != o.arrows_.size()) return arrows_.size() < o.arrows_.size();
    if (arrows_ != o.arrows_) return arrows_ < o.arrows_;
    return source_ < o.source_;
}

std::string Path::display(const Quiver& q) const {
    if (arrows_.empty()) return "e(" + q.vertex_name(source_) + ")";
    std::string s;
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        if (i) s += "*";
        s += q.arrow(arrows_[i]).name;
    }
    return s;
}

Path compose(const Quiver& quiver, const Path& q, const Path& p) {
    if (p.target(quiver) != q.source(quiver))
        throw CompositionError("cannot compose: target of '" + p.display(quiver) +
                               "' is not the source of '" + q.display(quiver) + "'");
    if (p.length() == 0) return q;
    if (q.length() == 0) return p;
    std::vector<int> arrows = q.arrows();
    arrows.insert(arrows.end(), p.arrows().begin(), p.arrows().end());
    return Path::of_arrows(quiver, std::move(arrows));
}

std::vector<Path> right_subpaths(const Quiver& quiver, const Path& p) {
    std::vector<Path> subs;
    subs.push_back(Path::stationary(p.source(quiver)));
    const auto& arr = p.arrows();
    for (int len = 1; len <= p.length(); ++len) {
        std::vector<int> tail(arr.end() - len, arr.end());
        subs.push_back(Path::of_arrows(quiver, std::move(tail)));
    }
    return subs;
}

std::vector<DetourData> detours(const Quiver& quiver, const Path& p) {
    std::vector<DetourData> out;
    std::vector<Path> subs = right_subpaths(quiver, p);
    for (const Path& u : subs) {
        int end = u.target(quiver);
        for (int a : quiver.arrows_from(end)) {
            // alpha*u must not itself be a right subpath of p
            Path au = compose(quiver, Path::of_arrow(quiver, a), u);
            bool is_sub = std::find(subs.begin(), subs.end(), au) != subs.end();
            if (is_sub) continue;
            std::vector<Path> vfam;
            for (const Path& v : subs)
                if (v.length() >= u.length() + 1 && v.target(quiver) == quiver.arrow(a).dst)
                    vfam.push_back(v);
            if (vfam.empty()) continue;
            out.push_back(DetourData{a, u, std::move(vfam)});
        }
    }
    return out;
}

bool is_route(const Quiver& quiver, const Path& q, const Path& p) {
    if (q.source(quiver) != p.source(quiver))
        throw Error("is_route: path does not start at s(p)");
    std::vector<int> pv = p.vertex_sequence(quiver);
    std::vector<int> qv = q.vertex_sequence(quiver);
    // Greedy in-order subsequence match.
    std::size_t pi = 0;
    for (int v : qv) {
        while (pi < pv.size() && pv[pi] != v) ++pi;
        if (pi == pv.size()) return false;
        ++pi;
    }
    return true;
}

std::vector<Path> paths_from(const Quiver& quiver, int v, int maxlen) {
    std::vector<Path> out;
    std::vector<Path> frontier{Path::stationary(v)};
    out.push_back(frontier.front());
    for (int len = 1; len <= maxlen; ++len) {
        std::vector<Path> next;
        for (const Path& p : frontier)
            for (int a : quiver.arrows_from(p.target(quiver)))
                next.push_back(compose(quiver, Path::of_arrow(quiver, a), p));
        if (next.empty()) break;
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

std::vector<Path> all_paths_up_to(const Quiver& quiver, int maxlen) {
    std::vector<Path> out;
    for (int v = 0; v < quiver.num_vertices(); ++v) {
        std::vector<Path> ps = paths_from(quiver, v, maxlen);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Path> non_routes_up_to(const Quiver& quiver, const Path& p, int maxlen) {
    std::vector<Path> out;
    for (const Path& q : paths_from(quiver, p.source(quiver), maxlen))
        if (!is_route(quiver, q, p)) out.push_back(q);
    return out;
}

ArrowClassification classify_arrows(const Quiver& quiver, const Path& p) {
    std::vector<int> mast = p.vertex_sequence(quiver);
    {
        std::set<int> distinct(mast.begin(), mast.end());
        if (distinct.size() != mast.size())
            throw UnsupportedConfigError("classify_arrows: mast revisits a vertex");
    }
    int n = static_cast<int>(mast.size());
    auto mast_pos = [&](int v) -> int {  // 1-based position, 0 if off the mast
        for (int i = 0; i < n; ++i)
            if (mast[static_cast<std::size_t>(i)] == v) return i + 1;
        return 0;
    };
    std::set<int> mast_arrows(p.arrows().begin(), p.arrows().end());
    ArrowClassification cl;
    cl.mast_vertices = mast;
    int touched = 0;
    for (int a = 0; a < quiver.num_arrows(); ++a) {
        int sp = mast_pos(quiver.arrow(a).src);
        int tp = mast_pos(quiver.arrow(a).dst);
        if (sp == 0 && tp == 0) continue;
        ++touched;
        if (mast_arrows.count(a)) continue;
        int classes = 0;
        if (sp >= 1 && sp <= n - 1 && tp == 0) {
            cl.B.push_back(a);
            ++classes;
        }
        if (sp == n) {
            cl.B_prime.push_back(a);
            ++classes;
        }
        if (sp == 0 && tp >= 2) {
            cl.C.push_back(a);
            ++classes;
        }
        if (tp == 1) {
            cl.C_prime.push_back(a);
            ++classes;
        }
        if (sp >= 1 && tp >= 1) {
            cl.D.push_back(a);
            ++classes;
        }
        if (classes != 1)
            throw UnsupportedConfigError(
                "classify_arrows: arrow '" + quiver.arrow(a).name +
                "' does not fall in exactly one contact class (cycle through the mast?)");
    }
    std::size_t total = cl.B.size() + cl.B_prime.size() + cl.C.size() + cl.C_prime.size() +
                        cl.D.size() + mast_arrows.size();
    if (total != static_cast<std::size_t>(touched))
        throw InvariantViolation("classify_arrows: classes do not cover the touching arrows");
    return cl;
}

namespace {

bool cycle_dfs(const Quiver& q, int v, std::vector<int>& state) {
    state[static_cast<std::size_t>(v)] = 1;
    for (int a : q.arrows_from(v)) {
        int w = q.arrow(a).dst;
        if (state[static_cast<std::size_t>(w)] == 1) return true;
        if (state[static_cast<std::size_t>(w)] == 0 && cycle_dfs(q, w, state)) return true;
    }
    state[static_cast<std::size_t>(v)] = 2;
    return false;
}

}  // namespace

bool has_oriented_cycle(const Quiver& quiver) {
    std::vector<int> state(static_cast<std::size_t>(quiver.num_vertices()), 0);
    for (int v = 0; v < quiver.num_vertices(); ++v)
        if (state[static_cast<std::size_t>(v)] == 0 && cycle_dfs(quiver, v, state)) return true;
    return false;
}

bool lies_on_cycle(const Quiver& quiver, int v) {
    // Reachability v -> v by a nonempty walk.
    std::vector<bool> seen(static_cast<std::size_t>(quiver.num_vertices()), false);
    std::vector<int> stack;
    for (int a : quiver.arrows_from(v)) {
        int w = quiver.arrow(a).dst;
        if (w == v) return true;
        if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = true;
            stack.push_back(w);
        }
    }
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int a : quiver.arrows_from(u)) {
            int w = quiver.arrow(a).dst;
            if (w == v) return true;
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
        }
    }
    return false;
}

}  // namespace userial
