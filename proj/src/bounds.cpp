#include "trc/bounds.hpp"

#include "trc/domination.hpp"
#include "trc/metrics.hpp"

#include <algorithm>

namespace trc {

auto to_string(Comparison c) -> const char *
{
    switch (c) {
    case Comparison::equal: return "==";
    case Comparison::at_least: return ">=";
    case Comparison::at_most: return "<=";
    case Comparison::between: return "in";
    }
    return "?";
}

auto BoundsReport::all_pass() const -> bool
{
    return std::ranges::all_of(entries, &BoundEntry::pass);
}

auto BoundsReport::find(const std::string & id) const -> const BoundEntry *
{
    auto it = std::ranges::find(entries, id, &BoundEntry::id);
    return it == entries.end() ? nullptr : &*it;
}

namespace {
    auto entry(std::string id, std::string hypothesis, bool applicable, Comparison cmp, int bound, int upper, int observed) -> BoundEntry
    {
        BoundEntry e{std::move(id), std::move(hypothesis), applicable, cmp, bound, upper, observed, true, false};
        if (! applicable)
            return e;
        switch (cmp) {
        case Comparison::equal: e.pass = observed == bound; e.tight = e.pass; break;
        case Comparison::at_least: e.pass = observed >= bound; e.tight = observed == bound; break;
        case Comparison::at_most: e.pass = observed <= bound; e.tight = observed == bound; break;
        case Comparison::between:
            e.pass = bound <= observed && observed <= upper;
            e.tight = observed == bound || observed == upper;
            break;
        }
        return e;
    }
}

auto bounds_report(const Graph & g, const TrcSolveResult & solved) -> BoundsReport
{
    const auto m = metrics(g);
    const int n = g.order(), c = solved.value;
    const bool isolate_free = m.min_degree >= 1;

    int d_tr = 0, d_t = 0;
    if (isolate_free) {
        d_tr = domatic(g, DominationKind::total_restrained).value;
        d_t = domatic(g, DominationKind::total).value;
    }

    BoundsReport r;
    r.entries.push_back(entry(bound_isolated_zero, "isolated vertex", ! isolate_free, Comparison::equal, 0, 0, c));
    r.entries.push_back(entry(bound_range, "isolate-free", isolate_free, Comparison::between, 2, n, c));
    r.entries.push_back(entry(bound_domatic, "isolate-free", isolate_free, Comparison::at_least, 2 * d_tr, 2 * d_tr, c));
    r.entries.push_back(entry(bound_total_domatic, "isolate-free", isolate_free, Comparison::at_least, 2 * d_t, 2 * d_t, c));
    {
        int b = isolate_free ? 2 * (n / (n - m.min_degree + 1)) : 0;
        r.entries.push_back(entry(bound_min_degree, "isolate-free", isolate_free, Comparison::at_least, b, b, c));
    }
    {
        bool ok = m.connected && m.min_degree >= 2 && m.girth && *m.girth >= 7;
        r.entries.push_back(entry(bound_girth7, "connected, delta >= 2, girth >= 7", ok, Comparison::at_least, m.max_degree + 1, m.max_degree + 1, c));
    }
    r.entries.push_back(entry(bound_leaf, "delta = 1", m.min_degree == 1, Comparison::at_most, m.max_degree + 1, m.max_degree + 1, c));
    r.entries.push_back(entry(bound_min_degree2, "delta = 2", m.min_degree == 2, Comparison::at_most, 2 * m.max_degree, 2 * m.max_degree, c));
    return r;
}

} // namespace trc
