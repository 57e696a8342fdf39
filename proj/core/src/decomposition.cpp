#include "bullfree/decomposition.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <iterator>
#include <limits>
#include <set>
#include <tuple>
#include <utility>

namespace bullfree {

std::vector<Vertex> Split::x() const {
    std::vector<Vertex> out = a;
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

const char* to_string(CutKind k) {
    switch (k) {
        case CutKind::HomogeneousSet: return "homogeneous-set";
        case CutKind::ProperPair: return "proper-pair";
        case CutKind::SmallPair: return "small-pair";
    }
    return "?";
}

const char* to_string(MarkerRole r) {
    switch (r) {
        case MarkerRole::X: return "x";
        case MarkerRole::A: return "a";
        case MarkerRole::B: return "b";
        case MarkerRole::C: return "c";
        case MarkerRole::D: return "d";
    }
    return "?";
}

bool check_homogeneous_set(const Trigraph& t, const VertexSet& x) {
    const int k = x.count();
    if (k <= 1 || k >= t.size()) return false;
    for (Vertex v = 0; v < t.size(); ++v) {
        if (x.contains(v)) continue;
        if (t.switchable_neighbors(v).intersects(x)) return false;
        VertexSet s = t.strong_neighbors(v) & x;
        if (!s.empty() && s.count() != k) return false;
    }
    return true;
}

bool check_homogeneous_set(const Trigraph& t, std::span<const Vertex> x) {
    for (Vertex v : x)
        if (v < 0 || v >= t.size()) return false;
    VertexSet s(t.size());
    for (Vertex v : x) s.insert(v);
    if (s.count() != static_cast<int>(x.size())) return false;
    return check_homogeneous_set(t, s);
}

namespace {

// 0 = strongly anticomplete, 1 = strongly complete, -1 = neither.
int uniformity(const Trigraph& t, Vertex v, std::span<const Vertex> side) {
    bool all = true, none = true;
    for (Vertex u : side) {
        int th = t.theta(v, u);
        if (th == kSwitchable) return -1;
        if (th == kStrongEdge)
            none = false;
        else
            all = false;
    }
    if (all) return 1;
    if (none) return 0;
    return -1;
}

}  // namespace

std::optional<Split> derive_split(const Trigraph& t, std::span<const Vertex> a, std::span<const Vertex> b) {
    if (a.empty() || b.empty()) return std::nullopt;
    VertexSet inside(t.size());
    for (Vertex v : a) {
        if (v < 0 || v >= t.size() || inside.contains(v)) return std::nullopt;
        inside.insert(v);
    }
    for (Vertex v : b) {
        if (v < 0 || v >= t.size() || inside.contains(v)) return std::nullopt;
        inside.insert(v);
    }
    if (inside.count() < 3 || t.size() - inside.count() < 3) return std::nullopt;

    bool complete = true, anticomplete = true;
    for (Vertex u : a)
        for (Vertex v : b) {
            if (t.theta(u, v) != kStrongEdge) complete = false;
            if (t.theta(u, v) != kStrongAntiedge) anticomplete = false;
        }
    if (complete || anticomplete) return std::nullopt;

    Split s;
    s.a.assign(a.begin(), a.end());
    s.b.assign(b.begin(), b.end());
    std::sort(s.a.begin(), s.a.end());
    std::sort(s.b.begin(), s.b.end());
    for (Vertex v = 0; v < t.size(); ++v) {
        if (inside.contains(v)) continue;
        int ua = uniformity(t, v, a), ub = uniformity(t, v, b);
        if (ua < 0 || ub < 0) return std::nullopt;
        if (ua && ub)
            s.e.push_back(v);
        else if (ua)
            s.c.push_back(v);
        else if (ub)
            s.d.push_back(v);
        else
            s.f.push_back(v);
    }
    return s;
}

namespace {

// Grows r until every marked vertex of r has been processed. Returns false
// if r would exceed `limit` vertices.
bool hs_closure(const Trigraph& t, Vertex a, VertexSet& r, int limit) {
    r |= t.switchable_neighbors(a);
    VertexSet pending = r;
    pending.erase(a);
    const VertexSet& eta_a = t.strong_neighbors(a);
    while (true) {
        if (r.count() > limit) return false;
        Vertex x = pending.first();
        if (x < 0) return true;
        pending.erase(x);
        VertexSet add = (t.strong_neighbors(x) ^ eta_a) | t.switchable_neighbors(x);
        add.subtract(r);
        r |= add;
        pending |= add;
    }
}

struct PairMarks {
    VertexSet alpha;  // strongly adjacent to c, strongly antiadjacent to d
    VertexSet beta;   // strongly adjacent to d, strongly antiadjacent to c
    PairMarks(const Trigraph& t, Vertex c, Vertex d) {
        alpha = t.strong_neighbors(c) - t.neighbors(d);
        alpha.erase(d);
        beta = t.strong_neighbors(d) - t.neighbors(c);
        beta.erase(c);
    }
};

enum class ClosureEnd { Converged, Epsilon, TooLarge };

ClosureEnd hp_closure(const Trigraph& t, const PairMarks& m, Vertex a, Vertex b, VertexSet& r, int limit) {
    VertexSet pending = r;
    const VertexSet& eta_a = t.strong_neighbors(a);
    const VertexSet& eta_b = t.strong_neighbors(b);
    while (true) {
        if (r.count() > limit) return ClosureEnd::TooLarge;
        Vertex x = pending.first();
        if (x < 0) return ClosureEnd::Converged;
        pending.erase(x);
        const VertexSet* ref;
        if (m.alpha.contains(x))
            ref = &eta_a;
        else if (m.beta.contains(x))
            ref = &eta_b;
        else
            return ClosureEnd::Epsilon;
        VertexSet add = (t.strong_neighbors(x) ^ *ref) | t.switchable_neighbors(x);
        add.subtract(r);
        r |= add;
        pending |= add;
    }
}

}  // namespace

std::optional<VertexSet> forcing_hs(const Trigraph& t, Vertex a, Vertex b, const VertexSet& r0) {
    if (a == b || !r0.contains(a) || !r0.contains(b)) throw InputError("forcing_hs: r0 must contain a and b");
    VertexSet r = r0;
    hs_closure(t, a, r, t.size());
    if (r.count() >= t.size()) return std::nullopt;
    return r;
}

bool is_proper_tuple(const Trigraph& t, const ProperTuple& z) {
    const Vertex vs[4] = {z.a, z.b, z.c, z.d};
    for (int i = 0; i < 4; ++i) {
        if (vs[i] < 0 || vs[i] >= t.size()) return false;
        for (int j = i + 1; j < 4; ++j)
            if (vs[i] == vs[j]) return false;
    }
    return t.strongly_adjacent(z.a, z.c) && t.strongly_adjacent(z.b, z.d) && t.strongly_antiadjacent(z.b, z.c) &&
           t.strongly_antiadjacent(z.a, z.d);
}

namespace {

PairForcingResult finish_pair(const Trigraph& t, const ProperTuple& z, const VertexSet& r) {
    PairForcingResult out{PairForcingResult::Status::NoPair, {}, {}};
    if (t.size() - r.count() < 3) return out;
    VertexSet a_side = r & t.strong_neighbors(z.c);
    VertexSet b_side = r & t.strong_neighbors(z.d);
    out.a_side = a_side.to_vector();
    out.b_side = b_side.to_vector();
    out.status = derive_split(t, out.a_side, out.b_side) ? PairForcingResult::Status::Found
                                                         : PairForcingResult::Status::Degenerate;
    return out;
}

}  // namespace

PairForcingResult forcing_hp(const Trigraph& t, const ProperTuple& z, const VertexSet& r0) {
    if (!is_proper_tuple(t, z)) throw InputError("forcing_hp: tuple is not proper");
    if (r0.count() < 3 || !r0.contains(z.a) || !r0.contains(z.b) || r0.contains(z.c) || r0.contains(z.d))
        throw InputError("forcing_hp: r0 must have size >= 3 and meet the tuple exactly in {a, b}");
    PairMarks marks(t, z.c, z.d);
    VertexSet r = r0;
    if (hp_closure(t, marks, z.a, z.b, r, t.size()) == ClosureEnd::Epsilon)
        return {PairForcingResult::Status::NoPair, {}, {}};
    return finish_pair(t, z, r);
}

namespace {

// Depth-first forcing search for a homogeneous pair with |A∪B| <= 6. Every
// outside vertex that is mixed on A or on B (or has a switchable partner
// inside) must join one of the sides; when nothing is forced, the next
// member is guessed in increasing order.
//
// Since A is neither strongly complete nor anticomplete to B, some vertex of
// one side is mixed on (or switchable to) two vertices u, v of the other.
// The search seeds A = {u, v} for every near-twin pair and insists that B
// ends up nonempty.
class SmallPairSearch {
public:
    explicit SmallPairSearch(const Trigraph& t) : t_(t), n_(t.size()), a_(n_), b_(n_) {}

    std::optional<Split> run() {
        if (n_ < 6) return std::nullopt;
        // near_[u]: vertices v whose joint membership in one side forces at
        // most kMax - 2 further vertices.
        near_.assign(n_, VertexSet(n_));
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = u + 1; v < n_; ++v) {
                VertexSet d = (t_.strong_neighbors(u) ^ t_.strong_neighbors(v)) | t_.switchable_neighbors(u) |
                              t_.switchable_neighbors(v);
                d.erase(u);
                d.erase(v);
                if (d.count() > kMax - 2) continue;
                near_[u].insert(v);
                near_[v].insert(u);
            }
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v = near_[u].next(u); v >= 0; v = near_[u].next(v)) {
                // Seeding with a true twin pair never works: the
                // distinguishing vertex would be missing.
                if (t_.strong_neighbors(u) == t_.strong_neighbors(v) && t_.switchable_neighbors(u).empty() &&
                    t_.switchable_neighbors(v).empty())
                    continue;
                a_ = VertexSet(n_, {u, v});
                b_ = VertexSet(n_);
                if (grow(0)) return found_;
            }
        return std::nullopt;
    }

private:
    static constexpr int kMax = 6;

    bool grow(Vertex floor) {
        VertexSet x = a_ | b_;
        int size = x.count();
        VertexSet forced(n_);
        for (const VertexSet* side : {&a_, &b_}) {
            Vertex ref = side->first();
            if (ref < 0) continue;
            for (Vertex w = ref; w >= 0; w = side->next(w)) {
                forced |= t_.switchable_neighbors(w);
                if (w != ref) forced |= t_.strong_neighbors(w) ^ t_.strong_neighbors(ref);
            }
        }
        forced.subtract(x);
        if (size + forced.count() > kMax) return false;
        if (Vertex y = forced.first(); y >= 0) return place(y, floor);
        if (size >= 3 && !b_.empty()) {
            if (auto s = derive_split(t_, a_.to_vector(), b_.to_vector())) {
                found_ = std::move(*s);
                return true;
            }
        }
        // With B empty every vertex distinguishing u and v went to A.
        if (b_.empty() || size == kMax || n_ - size <= 3) return false;
        // A new member of a side is a near twin of its first vertex.
        VertexSet to_a = near_[a_.first()];
        VertexSet to_b = near_[b_.first()];
        for (Vertex y = floor; y < n_; ++y) {
            if (x.contains(y)) continue;
            if (to_a.contains(y) && try_side(a_, y, y + 1)) return true;
            if (to_b.contains(y) && try_side(b_, y, y + 1)) return true;
        }
        return false;
    }

    bool try_side(VertexSet& side, Vertex y, Vertex floor) {
        side.insert(y);
        bool ok = grow(floor);
        side.erase(y);
        return ok;
    }

    bool place(Vertex y, Vertex floor) { return try_side(a_, y, floor) || try_side(b_, y, floor); }

    const Trigraph& t_;
    int n_;
    VertexSet a_, b_;
    std::vector<VertexSet> near_;
    std::optional<Split> found_;
};

}  // namespace

std::optional<Split> find_small_pair(const Trigraph& t) {
    auto s = SmallPairSearch(t).run();
    if (s && s->b.front() < s->a.front()) {
        std::swap(s->a, s->b);
        std::swap(s->c, s->d);
    }
    return s;
}

namespace {

// Candidate order: smaller X, then lexicographically smaller X, then
// homogeneous sets before pairs, then lexicographically smaller A.
bool better(const Cut& lhs, const Cut& rhs) {
    if (lhs.x.size() != rhs.x.size()) return lhs.x.size() < rhs.x.size();
    if (lhs.x != rhs.x) return lhs.x < rhs.x;
    if (lhs.kind != rhs.kind) return lhs.kind == CutKind::HomogeneousSet;
    if (lhs.split && rhs.split) return lhs.split->a < rhs.split->a;
    return false;
}

std::vector<Vertex> complement_of(int n, const std::vector<Vertex>& x) {
    std::vector<Vertex> y;
    std::size_t i = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (i < x.size() && x[i] == v)
            ++i;
        else
            y.push_back(v);
    }
    return y;
}

void offer(std::optional<Cut>& best, Cut c) {
    if (!best || better(c, *best)) best = std::move(c);
}

}  // namespace

namespace {

// Runs the pair forcing closure for every proper tuple (a, b, c, d) with a
// and b fixed, sharing work between tuples. Instead of fixing c and d up
// front, each vertex taken into R is put on the side of a (mark alpha) or of
// b (mark beta), and the sets of c and d still consistent with those marks
// are narrowed. A tuple whose closure hits an epsilon vertex, or pulls c or
// d into R, runs out of candidates. Every surviving branch is the closure
// of exactly the tuples left in its candidate sets, so the results are those
// of the tuple by tuple sweep.
class PairSweep {
public:
    using Found = std::function<void(const std::vector<Vertex>&, const std::vector<Vertex>&)>;

    PairSweep(const Trigraph& t, Found found) : t_(t), found_(std::move(found)) {
        for (Vertex v = 0; v < t.size(); ++v) nu_.push_back(t.strong_antineighbors(v));
    }

    // `prune(r)` is true once no pair over r can beat the best cut so far.
    void run(Vertex a, Vertex b, const std::function<bool(const VertexSet&)>& prune) {
        const int n = t_.size();
        State s{VertexSet(n, {a, b}), VertexSet(n, {a}), VertexSet(n), t_.strong_neighbors(a) - t_.neighbors(b),
                t_.strong_neighbors(b) - t_.neighbors(a), false};
        s.cc.erase(b);
        s.dd.erase(a);
        if (s.cc.empty() || s.dd.empty()) return;
        a_ = a;
        b_ = b;
        // a and b only bring in their switchable partners
        VertexSet add = (t_.switchable_neighbors(a) | t_.switchable_neighbors(b)) - s.r;
        s.r |= add;
        s.pending |= add;
        narrow(s);
        if (s.cc.empty() || s.dd.empty()) return;
        prune_ = &prune;
        close(std::move(s));
    }

private:
    struct State {
        VertexSet r, side_a, pending, cc, dd;
        bool seeded;  // a third vertex e has been added
    };

    void narrow(State& s) const {
        s.cc.subtract(s.r);
        s.dd.subtract(s.r);
    }

    // Side 0 puts x in A: c in eta(x), d in nu(x). Side 1 is the reverse.
    bool feasible(const State& s, Vertex x, int side) const {
        const VertexSet& eta = t_.strong_neighbors(x);
        const VertexSet& nu = nu_[x];
        return s.cc.intersects(side == 0 ? eta : nu) && s.dd.intersects(side == 0 ? nu : eta);
    }

    void assign(State& s, Vertex x, int side) const {
        const VertexSet& eta = t_.strong_neighbors(x);
        const VertexSet& nu = nu_[x];
        s.pending.erase(x);
        s.cc &= side == 0 ? eta : nu;
        s.dd &= side == 0 ? nu : eta;
        if (side == 0) s.side_a.insert(x);
        const VertexSet& ref = t_.strong_neighbors(side == 0 ? a_ : b_);
        VertexSet add = ((eta ^ ref) | t_.switchable_neighbors(x)) - s.r;
        s.r |= add;
        s.pending |= add;
        narrow(s);
    }

    // Candidate sets only shrink, so a vertex with a single feasible side
    // keeps it in every completion. Those are placed first; branching waits
    // until every pending vertex could go either way.
    void close(State s) {
        while (true) {
            if ((*prune_)(s.r)) return;
            if (s.pending.empty()) {
                converged(std::move(s));
                return;
            }
            Vertex branch = -1;
            bool forced = false;
            for (Vertex x = s.pending.first(); x >= 0; x = s.pending.next(x)) {
                const bool on_a = feasible(s, x, 0), on_b = feasible(s, x, 1);
                if (!on_a && !on_b) return;
                if (on_a != on_b) {
                    assign(s, x, on_a ? 0 : 1);
                    if (s.cc.empty() || s.dd.empty()) return;
                    forced = true;
                    break;
                }
                if (branch < 0) branch = x;
            }
            if (forced) continue;
            for (int side = 0; side < 2; ++side) {
                State next = s;
                assign(next, branch, side);
                if (next.cc.empty() || next.dd.empty()) continue;
                close(std::move(next));
            }
            return;
        }
    }

    void converged(State s) {
        const int n = t_.size();
        if (s.r.count() >= 3) {
            if (n - s.r.count() < 3) return;
            found_(s.side_a.to_vector(), (s.r - s.side_a).to_vector());
            return;
        }
        if (s.seeded) return;
        // R = {a, b}: try every third vertex e
        for (Vertex e = 0; e < n; ++e) {
            if (s.r.contains(e)) continue;
            State next{s.r, s.side_a, VertexSet(n, {e}), s.cc, s.dd, true};
            next.r.insert(e);
            narrow(next);
            if (next.cc.empty() || next.dd.empty()) continue;
            close(std::move(next));
        }
    }

    const Trigraph& t_;
    Found found_;
    std::vector<VertexSet> nu_;
    Vertex a_ = -1, b_ = -1;
    const std::function<bool(const VertexSet&)>* prune_ = nullptr;
};

}  // namespace

std::optional<Cut> find_min_cut(const Trigraph& t) {
    const int n = t.size();
    if (auto sp = find_small_pair(t)) {
        auto x = sp->x();
        return Cut{CutKind::SmallPair, x, complement_of(n, x), std::move(sp)};
    }

    std::optional<Cut> best;
    auto limit = [&] { return best ? static_cast<int>(best->x.size()) : n - 1; };

    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            VertexSet r(n, {a, b});
            if (!hs_closure(t, a, r, limit())) continue;
            if (r.count() >= n) continue;
            auto x = r.to_vector();
            offer(best, Cut{CutKind::HomogeneousSet, x, complement_of(n, x), std::nullopt});
        }

    // Proper pairs have |X| >= 3.
    if (best && best->x.size() < 3) return best;

    // Ties on X keep the first pair found, so a closure that has reached
    // the best size without being lexicographically smaller is dropped.
    VertexSet best_x(n);
    auto prune = [&](const VertexSet& r) {
        if (!best) return r.count() > n - 1;
        const int k = static_cast<int>(best->x.size());
        if (r.count() != k) return r.count() > k;
        Vertex first = (r ^ best_x).first();
        return first < 0 || !r.contains(first);
    };
    PairSweep sweep(t, [&](const std::vector<Vertex>& a_side, const std::vector<Vertex>& b_side) {
        std::vector<Vertex> x;
        std::merge(a_side.begin(), a_side.end(), b_side.begin(), b_side.end(), std::back_inserter(x));
        if (prune(VertexSet::from(n, x))) return;
        auto split = derive_split(t, a_side, b_side);
        if (!split) return;  // two sides strongly complete or anticomplete
        // Orient so that A holds the smallest vertex of X.
        if (split->b.front() < split->a.front()) {
            std::swap(split->a, split->b);
            std::swap(split->c, split->d);
        }
        auto y = complement_of(n, x);
        offer(best, Cut{CutKind::ProperPair, std::move(x), std::move(y), std::move(split)});
        best_x = VertexSet::from(n, best->x);
    });
    if (best) best_x = VertexSet::from(n, best->x);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) sweep.run(a, b, prune);
    return best;
}

const Marker* Block::marker(MarkerRole r) const {
    for (const auto& m : markers)
        if (m.role == r) return &m;
    return nullptr;
}

Block block_x(const WeightedTrigraph& t, const Cut& cut) {
    Block blk{Block::Side::X, induce(t, cut.x), cut.x, {}};
    if (cut.kind != CutKind::ProperPair) return blk;
    const Split& s = *cut.split;
    const Trigraph& inner = blk.trigraph.base();
    std::string lc = inner.has_labels() ? "c*" : std::string{};
    std::string ld = inner.has_labels() ? "d*" : std::string{};
    Vertex c = blk.trigraph.add_vertex(1, lc);
    Vertex d = blk.trigraph.add_vertex(1, ld);
    for (std::size_t i = 0; i < cut.x.size(); ++i) {
        Vertex v = cut.x[i];
        if (std::binary_search(s.a.begin(), s.a.end(), v)) blk.trigraph.set_theta(c, static_cast<Vertex>(i), kStrongEdge);
        if (std::binary_search(s.b.begin(), s.b.end(), v)) blk.trigraph.set_theta(d, static_cast<Vertex>(i), kStrongEdge);
    }
    blk.trigraph.set_theta(c, d, kSwitchable, 2);
    blk.origin.push_back(-1);
    blk.origin.push_back(-1);
    blk.markers.push_back({c, MarkerRole::C, s.c});
    blk.markers.push_back({d, MarkerRole::D, s.d});
    return blk;
}

Block block_y(const WeightedTrigraph& t, const Cut& cut, const SideAlphas& alphas) {
    if (cut.kind == CutKind::HomogeneousSet) {
        if (alphas.x < 0) throw InputError("block_y: negative alpha");
        const Vertex rep = cut.x.front();
        std::vector<Vertex> keep = cut.y;
        keep.insert(std::lower_bound(keep.begin(), keep.end(), rep), rep);
        Block blk{Block::Side::Y, induce(t, keep), keep, {}};
        const Vertex marker = static_cast<Vertex>(std::lower_bound(keep.begin(), keep.end(), rep) - keep.begin());
        // A homogeneous set carries no switchable pair to the outside, so the
        // marker has none inside the block either.
        blk.trigraph.set_weight(marker, alphas.x);
        blk.origin[marker] = -1;
        blk.markers.push_back({marker, MarkerRole::X, cut.x});
        return blk;
    }
    const Split& s = *cut.split;
    if (alphas.a < 0 || alphas.b < 0 || alphas.ab < std::max(alphas.a, alphas.b) ||
        alphas.ab > checked_add(alphas.a, alphas.b))
        throw InputError("block_y: alphas violate max(alpha_A, alpha_B) <= alpha_AB <= alpha_A + alpha_B");
    Block blk{Block::Side::Y, induce(t, cut.y), cut.y, {}};
    const bool labelled = blk.trigraph.base().has_labels();
    Vertex a = blk.trigraph.add_vertex(alphas.a, labelled ? "a*" : "");
    Vertex b = blk.trigraph.add_vertex(alphas.b, labelled ? "b*" : "");
    for (std::size_t i = 0; i < cut.y.size(); ++i) {
        Vertex v = cut.y[i];
        bool in_c = std::binary_search(s.c.begin(), s.c.end(), v);
        bool in_d = std::binary_search(s.d.begin(), s.d.end(), v);
        bool in_e = std::binary_search(s.e.begin(), s.e.end(), v);
        if (in_c || in_e) blk.trigraph.set_theta(a, static_cast<Vertex>(i), kStrongEdge);
        if (in_d || in_e) blk.trigraph.set_theta(b, static_cast<Vertex>(i), kStrongEdge);
    }
    blk.trigraph.set_theta(a, b, kSwitchable, alphas.ab);
    blk.origin.push_back(-1);
    blk.origin.push_back(-1);
    blk.markers.push_back({a, MarkerRole::A, s.a});
    blk.markers.push_back({b, MarkerRole::B, s.b});
    return blk;
}

}  // namespace bullfree
