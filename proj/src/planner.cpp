#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "pharmonic/hurwitz.hpp"

namespace pharmonic {

namespace {

using Key = std::tuple<int, int, int>;  // (r, s, t)

struct Entry {
    TriplePlan plan;
    int depth = 0;
    std::string str;
    std::optional<HurwitzFamily> family;  // materialized lazily for doubles
};

TriplePlan make_base(int d) {
    TriplePlan p;
    p.kind = TriplePlan::Kind::Base;
    p.base_dim = d;
    p.r = p.s = p.t = d;
    return p;
}

TriplePlan make_swap(const TriplePlan& c) {
    TriplePlan p;
    p.kind = TriplePlan::Kind::Swap;
    p.children = {c};
    p.r = c.s;
    p.s = c.r;
    p.t = c.t;
    return p;
}

TriplePlan make_restrict(const TriplePlan& c, int r2, int s2) {
    if (r2 == c.r && s2 == c.s) return c;
    TriplePlan p;
    p.kind = TriplePlan::Kind::Restrict;
    p.children = {c};
    p.r2 = r2;
    p.s2 = s2;
    p.r = r2;
    p.s = s2;
    p.t = c.t;
    return p;
}

TriplePlan make_sum(const TriplePlan& a, const TriplePlan& b) {
    const int s = std::min(a.s, b.s);
    TriplePlan p;
    p.kind = TriplePlan::Kind::Sum;
    p.children = {make_restrict(a, a.r, s), make_restrict(b, b.r, s)};
    p.r = a.r + b.r;
    p.s = s;
    p.t = a.t + b.t;
    return p;
}

TriplePlan make_double(const TriplePlan& c, int r2) {
    TriplePlan inner = make_restrict(c, r2, c.s);
    TriplePlan p;
    p.kind = TriplePlan::Kind::Double;
    p.children = {inner};
    p.r = r2 + 2;
    p.s = p.t = 2 * c.t;
    return p;
}

// Closure of the rule set {base, swap, sum, double} with restrictions folded
// into sums, doubles and the final answer. States are kept Pareto-optimal:
// a state is dropped when another offers at least the same (r, s) at no
// larger t, with depth room for the extra restrict.
class Search {
public:
    Search(int t_cap, int budget) : t_cap_(t_cap), budget_(budget) {}

    void run() {
        for (int d : {1, 2, 4, 8})
            if (d <= t_cap_) offer(make_base(d));
        while (!queue_.empty()) {
            Key k = queue_.front();
            queue_.pop_front();
            auto it = states_.find(k);
            if (it == states_.end()) continue;
            expand(k);
        }
    }

    // Smallest t with r >= r_req, s >= s_req; plan restricted to the target.
    std::optional<PlanResult> answer(int r_req, int s_req) const {
        const Entry* best = nullptr;
        int best_t_val = 0;
        for (const auto& [k, e] : states_) {
            auto [r, s, t] = k;
            if (r < r_req || s < s_req) continue;
            if (!best || t < best_t_val) {
                best = &e;
                best_t_val = t;
            }
        }
        if (!best) return std::nullopt;
        PlanResult res;
        res.plan = make_restrict(best->plan, r_req, s_req);
        res.t = best_t_val;
        return res;
    }

private:
    int t_cap_, budget_;
    std::map<Key, Entry> states_;
    std::deque<Key> queue_;

    static bool better(const Entry& a, const Entry& b) {
        return std::tie(a.depth, a.str) < std::tie(b.depth, b.str);
    }

    void offer(const TriplePlan& plan) {
        if (plan.t > t_cap_ || plan.r > plan.t || plan.s > plan.t) return;
        Entry e;
        e.plan = plan;
        e.depth = plan.depth();
        if (e.depth > budget_) return;
        e.str = plan.str();
        Key k{plan.r, plan.s, plan.t};
        // dominated by an existing state?
        for (const auto& [ko, eo] : states_) {
            auto [ro, so, to] = ko;
            auto [r, s, t] = k;
            if (ro >= r && so >= s && to <= t) {
                const bool same_shape = (ro == r && so == s && to == t);
                if ((same_shape && !better(e, eo)) || (!same_shape && eo.depth + 1 <= e.depth))
                    return;
            }
        }
        // drop states the new one dominates
        for (auto it = states_.begin(); it != states_.end();) {
            auto [ro, so, to] = it->first;
            auto [r, s, t] = k;
            const bool same_shape = (ro == r && so == s && to == t);
            if (r >= ro && s >= so && t <= to &&
                ((same_shape && better(e, it->second)) ||
                 (!same_shape && e.depth + 1 <= it->second.depth))) {
                it = states_.erase(it);
            } else {
                ++it;
            }
        }
        states_[k] = std::move(e);
        queue_.push_back(k);
    }

    const HurwitzFamily& family_of(const Key& k) {
        Entry& e = states_.at(k);
        if (!e.family) e.family = e.plan.replay();
        return *e.family;
    }

    void expand(const Key& k) {
        Entry snapshot = states_.at(k);
        auto [r, s, t] = k;

        if (r != s) offer(make_swap(snapshot.plan));

        // sums share the smaller s
        std::vector<std::pair<Key, TriplePlan>> peers;
        peers.reserve(states_.size());
        for (const auto& [ko, eo] : states_) peers.emplace_back(ko, eo.plan);
        for (const auto& [ko, plan_o] : peers) {
            offer(make_sum(snapshot.plan, plan_o));
            offer(make_sum(plan_o, snapshot.plan));
        }

        // doubling applies to square families, optionally after cutting r
        if (s == t && 2 * t <= t_cap_) {
            for (int r2 = r; r2 >= 1; --r2) {
                TriplePlan cand = make_double(snapshot.plan, r2);
                if (cand.depth() > budget_) continue;
                try {
                    HurwitzFamily base = family_of(k);
                    HurwitzFamily cut = restrict_family(base, r2, s);
                    HurwitzFamily doubled = double_family(cut);
                    (void)doubled;
                } catch (const std::exception&) {
                    continue;  // this doubling has no rational completion
                }
                offer(cand);
            }
        }
    }
};

TriplePlan trivial_plan(int r, int s) {
    // [r, s, rs] from rs scalar blocks, ignoring the budget.
    TriplePlan row = make_base(1);
    for (int i = 1; i < r; ++i) row = make_sum(row, make_base(1));  // [r,1,r]
    TriplePlan out = make_swap(row);                                // [1,r,r]
    TriplePlan acc = out;
    for (int j = 1; j < s; ++j) acc = make_sum(acc, out);           // [s,r,rs]
    return make_restrict(make_swap(acc), r, s);
}

}  // namespace

PlanResult best_t(int r, int s, int budget) {
    if (r < 1 || s < 1) throw std::invalid_argument("best_t: dimensions must be positive");
    const int hard_cap = r * s;
    int t_cap = std::max(r, s);
    while (true) {
        Search search(t_cap, budget);
        search.run();
        if (auto res = search.answer(r, s)) {
            HurwitzFamily check = res->plan.replay();
            if (!check.matrix_equations_ok())
                throw std::logic_error("best_t: replayed plan failed the exact identity check");
            return *res;
        }
        if (t_cap >= hard_cap) break;
        t_cap = std::min(2 * t_cap, hard_cap);
    }
    PlanResult res;
    res.plan = trivial_plan(r, s);
    res.t = r * s;
    return res;
}

}  // namespace pharmonic
