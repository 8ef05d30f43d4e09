#include "sidonlab/sidon.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "sidonlab/parallel.hpp"

namespace sidonlab {

PointSet make_point_set(FieldPtr field, std::vector<Point> points) {
    for (const auto& pt : points)
        if (pt.x >= field->q() || pt.y >= field->q())
            fail(Errc::CoefficientOutOfRange, "point index out of range");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return PointSet{std::move(field), std::move(points)};
}

PointSet pair_point_set(const Poly& P, const Poly& Q) {
    require_same_field(*P.field, *Q.field);
    const std::uint32_t q = P.field->q();
    std::vector<Point> pts;
    pts.reserve(q);
    for (std::uint32_t x = 0; x < q; ++x)
        pts.push_back(Point{evaluate_index(P, x), evaluate_index(Q, x)});
    return make_point_set(P.field, std::move(pts));
}

namespace {

// First-seen map over componentwise differences/sums keyed by (dx, dy).
class PairIndex {
  public:
    explicit PairIndex(std::uint32_t q) : q_(q) {
        if (std::uint64_t{q} * q <= (std::uint64_t{1} << 22)) flat_.assign(std::uint64_t{q} * q, -1);
    }

    std::int64_t find(std::uint32_t dx, std::uint32_t dy) const {
        const std::uint64_t key = std::uint64_t{dx} * q_ + dy;
        if (!flat_.empty()) return flat_[key];
        auto it = sparse_.find(key);
        return it == sparse_.end() ? -1 : it->second;
    }

    void insert(std::uint32_t dx, std::uint32_t dy, std::int64_t packed) {
        const std::uint64_t key = std::uint64_t{dx} * q_ + dy;
        if (!flat_.empty())
            flat_[key] = packed;
        else
            sparse_.emplace(key, packed);
    }

  private:
    std::uint32_t q_;
    std::vector<std::int64_t> flat_;
    std::unordered_map<std::uint64_t, std::int64_t> sparse_;
};

}  // namespace

SidonVerdict is_sidon_set(const PointSet& s) {
    require_odd_characteristic(*s.field);
    const Field& f = *s.field;
    const auto& pts = s.points;
    const std::size_t n = pts.size();
    PairIndex seen(f.q());
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const std::uint32_t dx = f.sub(pts[j].x, pts[i].x);
            const std::uint32_t dy = f.sub(pts[j].y, pts[i].y);
            const std::int64_t hit_same = seen.find(dx, dy);
            const std::int64_t hit_opp = seen.find(f.neg(dx), f.neg(dy));
            if (hit_same >= 0 || hit_opp >= 0) {
                const std::int64_t packed = hit_same >= 0 ? hit_same : hit_opp;
                const Point a1 = pts[static_cast<std::size_t>(packed) / n];
                const Point a2 = pts[static_cast<std::size_t>(packed) % n];
                // orient the current pair so that a1 - a2 = a3 - a4
                Point a3 = pts[j], a4 = pts[i];
                if (hit_same < 0) std::swap(a3, a4);
                return SidonVerdict{false, std::array<Point, 4>{a1, a2, a3, a4}};
            }
            seen.insert(dx, dy, static_cast<std::int64_t>(j * n + i));
        }
    }
    return SidonVerdict{true, std::nullopt};
}

bool is_maximum_sidon_pair(const Poly& P, const Poly& Q) {
    require_same_field(*P.field, *Q.field);
    require_odd_characteristic(*P.field);
    const PointSet s = pair_point_set(P, Q);
    if (s.points.size() != P.field->q()) return false;
    return is_sidon_set(s).is_sidon;
}

std::map<Point, std::uint32_t> sum_representation_profile(const PointSet& s) {
    const SidonVerdict v = is_sidon_set(s);
    if (!v.is_sidon) fail(Errc::NotSidon, "sum profile requires a Sidon set");
    const Field& f = *s.field;
    std::map<Point, std::uint32_t> profile;
    for (const auto& a : s.points)
        for (const auto& b : s.points)
            ++profile[Point{f.add(a.x, b.x), f.add(a.y, b.y)}];
    return profile;
}

// ---------------------------------------------------------------------------
// Constructive companions
// ---------------------------------------------------------------------------

namespace {

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

bool is_monic_monomial(const Poly& p, std::uint64_t& r_out) {
    if (p.coeffs.empty()) return false;
    for (std::size_t i = 0; i + 1 < p.coeffs.size(); ++i)
        if (p.coeffs[i] != 0) return false;
    if (p.coeffs.back() != 1) return false;
    r_out = p.coeffs.size() - 1;
    return r_out >= 1;
}

}  // namespace

CompanionResult constructive_companion(const Poly& P) {
    require_odd_characteristic(*P.field);
    const FieldPtr field = P.field;
    const Poly red = reduce_mod_xq_minus_x(P);
    const std::int64_t d = red.degree();

    auto verified = [&](Poly Q, std::string note) -> CompanionResult {
        if (!is_maximum_sidon_pair(P, Q))
            fail(Errc::Internal, "constructive companion failed verification");
        return CompanionResult{CompanionStatus::Found, std::move(Q),
                               CompanionMethod::Constructive, std::move(note)};
    };

    if (d == 1) return verified(monomial(field, 2), "degree 1: paired with x^2");
    if (d == 2) return verified(monomial(field, 1), "degree 2: paired with x");

    std::uint64_t r = 0;
    if (is_monic_monomial(red, r) && gcd64(r, field->q() - 1) == 1)
        return verified(reduce_mod_xq_minus_x(monomial(field, 2 * r)),
                        "monomial with exponent coprime to q-1: paired with x^(2r)");

    // planar test (local to avoid a cycle with the criteria module)
    {
        const std::uint32_t q = field->q();
        const ValueTable tab = value_table(red);
        bool planar = true;
        std::vector<bool> hit(q);
        for (std::uint32_t a = 1; a < q && planar; ++a) {
            std::fill(hit.begin(), hit.end(), false);
            for (std::uint32_t x = 0; x < q; ++x) {
                const std::uint32_t v =
                    field->sub(tab.values[field->add(x, a)], tab.values[x]);
                if (hit[v]) {
                    planar = false;
                    break;
                }
                hit[v] = true;
            }
        }
        if (planar) return verified(monomial(field, 1), "planar: paired with x");
    }

    return CompanionResult{CompanionStatus::Unknown, std::nullopt,
                           CompanionMethod::Constructive, "no constructive rule applies"};
}

// ---------------------------------------------------------------------------
// Exhaustive search machinery
// ---------------------------------------------------------------------------

namespace {

// Incremental Sidon state over flat difference flags; q stays tiny here.
class DiffState {
  public:
    explicit DiffState(const Field& f)
        : f_(f), q_(f.q()), used_(std::size_t{q_} * q_, 0), point_used_(used_.size(), 0) {}

    bool try_add(Point np) {
        const std::size_t code = std::size_t{np.x} * q_ + np.y;
        if (point_used_[code]) return false;
        // Check and mark one existing point at a time: a collision can also
        // come from two differences created by this same insertion (np the
        // midpoint of two set members), so marks must be visible early.
        for (std::size_t k = 0; k < pts_.size(); ++k) {
            const Point& e = pts_[k];
            const std::uint32_t dx = f_.sub(np.x, e.x);
            const std::uint32_t dy = f_.sub(np.y, e.y);
            if (used_[std::size_t{dx} * q_ + dy] ||
                used_[std::size_t{f_.neg(dx)} * q_ + f_.neg(dy)]) {
                unmark(np, k);
                return false;
            }
            used_[std::size_t{dx} * q_ + dy] = 1;
            used_[std::size_t{f_.neg(dx)} * q_ + f_.neg(dy)] = 1;
        }
        point_used_[code] = 1;
        pts_.push_back(np);
        return true;
    }

    void remove_last() {
        const Point np = pts_.back();
        pts_.pop_back();
        point_used_[std::size_t{np.x} * q_ + np.y] = 0;
        unmark(np, pts_.size());
    }

    std::size_t size() const { return pts_.size(); }

  private:
    // Clear the difference marks of np against pts_[0..count).
    void unmark(Point np, std::size_t count) {
        for (std::size_t k = 0; k < count; ++k) {
            const Point& e = pts_[k];
            const std::uint32_t dx = f_.sub(np.x, e.x);
            const std::uint32_t dy = f_.sub(np.y, e.y);
            used_[std::size_t{dx} * q_ + dy] = 0;
            used_[std::size_t{f_.neg(dx)} * q_ + f_.neg(dy)] = 0;
        }
    }

    const Field& f_;
    std::uint32_t q_;
    std::vector<Point> pts_;
    std::vector<std::uint8_t> used_;
    std::vector<std::uint8_t> point_used_;
};

struct BranchOutcome {
    bool found = false;
    bool budget_hit = false;
    std::uint64_t nodes = 0;
    std::vector<std::uint32_t> table;  // full Q table when found
};

// DFS over Q(x_depth) values for one fixed Q(x_1) branch. Stops at the
// first completed table (canonical order) or when the node cap is hit.
class CompanionBranch {
  public:
    CompanionBranch(const Field& f, const std::vector<std::uint32_t>& p_table,
                    std::uint64_t budget, const std::atomic<std::size_t>& cutoff,
                    std::size_t branch)
        : f_(f), q_(f.q()), p_table_(p_table), budget_(budget), cutoff_(cutoff),
          branch_(branch), state_(f) {}

    BranchOutcome run(std::uint32_t first_value) {
        qvals_.assign(q_, 0);
        if (!state_.try_add(Point{p_table_[0], 0})) return out_;  // cannot happen
        ++out_.nodes;
        if (q_ == 1) {
            finish();
            return out_;
        }
        qvals_[1] = first_value;
        if (state_.try_add(Point{p_table_[1], first_value})) {
            dfs(2);
            state_.remove_last();
        }
        return out_;
    }

  private:
    void finish() {
        out_.found = true;
        out_.table = qvals_;
    }

    bool aborted() const { return cutoff_.load(std::memory_order_relaxed) < branch_; }

    // returns true to stop the whole branch
    bool dfs(std::uint32_t depth) {
        if (depth == q_) {
            finish();
            return true;
        }
        if (aborted()) return true;
        for (std::uint32_t v = 0; v < q_; ++v) {
            if (++out_.nodes > budget_) {
                out_.budget_hit = true;
                return true;
            }
            if (!state_.try_add(Point{p_table_[depth], v})) continue;
            qvals_[depth] = v;
            const bool stop = dfs(depth + 1);
            state_.remove_last();
            if (stop) return true;
        }
        return false;
    }

    const Field& f_;
    const std::uint32_t q_;
    const std::vector<std::uint32_t>& p_table_;
    const std::uint64_t budget_;
    const std::atomic<std::size_t>& cutoff_;
    const std::size_t branch_;
    DiffState state_;
    std::vector<std::uint32_t> qvals_;
    BranchOutcome out_;
};

}  // namespace

CompanionResult companion_search(const Poly& P, std::uint64_t budget, unsigned jobs,
                                 SearchStats* stats) {
    require_odd_characteristic(*P.field);
    const FieldPtr field = P.field;
    const Field& f = *field;
    const std::uint32_t q = f.q();
    const std::vector<std::uint32_t> p_table = value_table(P).values;

    if (q == 1) fail(Errc::Internal, "field of size 1");

    // Branch b fixes Q(x_1) = b; translations of Q make Q(x_0) = 0 free.
    std::vector<BranchOutcome> outcomes(q);
    const std::size_t winner = find_first_branch(
        q, jobs, [&](std::size_t b, const std::atomic<std::size_t>& cutoff) {
            CompanionBranch branch(f, p_table, budget, cutoff, b);
            outcomes[b] = branch.run(static_cast<std::uint32_t>(b));
            return outcomes[b].found;
        });

    CompanionResult result;
    result.method = CompanionMethod::Exhaustive;
    SearchStats local;
    for (std::size_t b = 0; b < q; ++b) {
        local.nodes += outcomes[b].nodes;
        if (outcomes[b].budget_hit && (winner == q || b < winner)) {
            // an earlier subtree was not fully explored
            local.budget_hit = true;
            result.status = CompanionStatus::Unknown;
            result.note = "node budget exhausted";
            if (stats) *stats = local;
            return result;
        }
        if (b == winner) break;
    }
    if (winner < q) {
        const Poly Q = interpolate(ValueTable{field, outcomes[winner].table});
        if (!is_maximum_sidon_pair(P, Q))
            fail(Errc::Internal, "search result failed verification");
        result.status = CompanionStatus::Found;
        result.companion = Q;
        result.note = "first companion in canonical table order";
    } else {
        result.status = CompanionStatus::NotFound;
        result.note = "search space exhausted";
    }
    if (stats) *stats = local;
    return result;
}

std::vector<Poly> all_companions(const Poly& P, unsigned jobs) {
    require_odd_characteristic(*P.field);
    const FieldPtr field = P.field;
    const Field& f = *field;
    const std::uint32_t q = f.q();
    const std::vector<std::uint32_t> p_table = value_table(P).values;

    auto branch_tables = map_branches<std::vector<std::vector<std::uint32_t>>>(
        q, jobs, [&](std::size_t b) {
            std::vector<std::vector<std::uint32_t>> found;
            DiffState state(f);
            std::vector<std::uint32_t> qvals(q, 0);
            if (!state.try_add(Point{p_table[0], 0})) return found;
            if (q == 1) {
                found.push_back(qvals);
                return found;
            }
            qvals[1] = static_cast<std::uint32_t>(b);
            if (!state.try_add(Point{p_table[1], qvals[1]})) return found;
            std::function<void(std::uint32_t)> dfs = [&](std::uint32_t depth) {
                if (depth == q) {
                    found.push_back(qvals);
                    return;
                }
                for (std::uint32_t v = 0; v < q; ++v) {
                    if (!state.try_add(Point{p_table[depth], v})) continue;
                    qvals[depth] = v;
                    dfs(depth + 1);
                    state.remove_last();
                }
            };
            dfs(2);
            return found;
        });

    std::vector<Poly> out;
    for (auto& tables : branch_tables)
        for (auto& t : tables) out.push_back(interpolate(ValueTable{field, std::move(t)}));
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration and the low-degree representability check
// ---------------------------------------------------------------------------

std::vector<PointSet> enumerate_sidon_subsets(FieldPtr field, std::uint32_t size,
                                              bool force, unsigned jobs) {
    require_odd_characteristic(*field);
    const Field& f = *field;
    const std::uint32_t q = f.q();
    if (q > 5 && !force)
        fail(Errc::TooLarge, "enumeration above q = 5 requires the override flag");
    const std::uint32_t cells = q * q;
    if (size == 0) return {make_point_set(field, {})};

    auto point_of = [&](std::uint32_t code) {
        return Point{code / q, code % q};
    };

    auto branch_sets = map_branches<std::vector<std::vector<Point>>>(
        cells, jobs, [&](std::size_t first) {
            std::vector<std::vector<Point>> found;
            DiffState state(f);
            std::vector<Point> cur;
            if (!state.try_add(point_of(static_cast<std::uint32_t>(first)))) return found;
            cur.push_back(point_of(static_cast<std::uint32_t>(first)));
            std::function<void(std::uint32_t)> dfs = [&](std::uint32_t start) {
                if (cur.size() == size) {
                    found.push_back(cur);
                    return;
                }
                // not enough cells left to finish
                if (cells - start < size - cur.size()) return;
                for (std::uint32_t code = start; code < cells; ++code) {
                    const Point pt = point_of(code);
                    if (!state.try_add(pt)) continue;
                    cur.push_back(pt);
                    dfs(code + 1);
                    cur.pop_back();
                    state.remove_last();
                }
            };
            dfs(static_cast<std::uint32_t>(first) + 1);
            return found;
        });

    std::vector<PointSet> out;
    for (auto& sets : branch_sets)
        for (auto& pts : sets) out.push_back(PointSet{field, std::move(pts)});
    return out;
}

std::vector<PointSet> enumerate_maximum_sidon_sets(FieldPtr field, bool force, unsigned jobs) {
    const std::uint32_t q = field->q();
    return enumerate_sidon_subsets(std::move(field), q, force, jobs);
}

ConjectureReport conjecture_check(FieldPtr field, bool force, unsigned jobs) {
    require_odd_characteristic(*field);
    if (field->n() != 1) fail(Errc::NotPrimeField, "the low-degree check runs over F_p only");
    if (field->p() > 5 && !force)
        fail(Errc::TooLarge, "p > 5 requires the override flag");

    const std::vector<PointSet> sets = enumerate_maximum_sidon_sets(field, force, jobs);
    const std::uint32_t q = field->q();

    auto representable = map_branches<char>(sets.size(), jobs, [&](std::size_t idx) -> char {
        std::vector<Point> perm = sets[idx].points;  // sorted; next_permutation covers all q!
        std::vector<std::pair<std::uint32_t, std::uint32_t>> xs(q), ys(q);
        do {
            for (std::uint32_t i = 0; i < q; ++i) {
                xs[i] = {i, perm[i].x};
                ys[i] = {i, perm[i].y};
            }
            const Poly P = interpolate(field, xs);
            if (P.degree() < 1 || P.degree() > 2) continue;
            const Poly Q = interpolate(field, ys);
            if (Q.degree() >= 1 && Q.degree() <= 2) return 1;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return 0;
    });

    ConjectureReport report;
    report.total_sets = sets.size();
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (representable[i])
            ++report.representable_sets;
        else
            report.counterexamples.push_back(sets[i]);
    }
    return report;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

std::string pointset_to_csv(const PointSet& s) {
    std::ostringstream os;
    os << "# field " << s.field->to_string() << '\n';
    for (const auto& pt : s.points) os << pt.x << ',' << pt.y << '\n';
    return os.str();
}

PointSet pointset_from_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    FieldPtr field;
    std::vector<Point> pts;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            const std::string prefix = "# field ";
            if (line.rfind(prefix, 0) == 0) field = parse_field(line.substr(prefix.size()));
            continue;
        }
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw SyntaxError("point line must be 'x,y'", lineno);
        const std::uint32_t x = static_cast<std::uint32_t>(std::stoul(line.substr(0, comma)));
        const std::uint32_t y = static_cast<std::uint32_t>(std::stoul(line.substr(comma + 1)));
        pts.push_back(Point{x, y});
    }
    if (!field) throw SyntaxError("missing '# field p^n/modulus' header", 0);
    return make_point_set(std::move(field), std::move(pts));
}

}  // namespace sidonlab
