#include <muig/interval.hh>

#include <algorithm>
#include <stdexcept>

using std::pair;
using std::string;
using std::string_view;
using std::vector;

namespace muig
{
    auto boundary_name(BoundaryType t) -> string_view
    {
        switch (t) {
            case BoundaryType::closed: return "closed";
            case BoundaryType::open: return "open";
            case BoundaryType::open_closed: return "open_closed";
            case BoundaryType::closed_open: return "closed_open";
        }
        throw std::logic_error("bad boundary type");
    }

    auto parse_boundary(string_view name) -> BoundaryType
    {
        for (auto t : {BoundaryType::closed, BoundaryType::open, BoundaryType::open_closed, BoundaryType::closed_open})
            if (boundary_name(t) == name)
                return t;
        throw std::invalid_argument("unknown boundary type '" + string(name) + "'");
    }

    auto make_boundary(bool lo_closed, bool hi_closed) -> BoundaryType
    {
        if (lo_closed)
            return hi_closed ? BoundaryType::closed : BoundaryType::closed_open;
        return hi_closed ? BoundaryType::open_closed : BoundaryType::open;
    }

    Interval::Interval(Rational lo, Rational hi, BoundaryType type) :
        _lo(std::move(lo)),
        _hi(std::move(hi)),
        _type(type)
    {
        if (! (_lo < _hi))
            throw std::invalid_argument("degenerate interval with lo " + _lo.str() + " and hi " + _hi.str());
    }

    auto Interval::has_point(const Rational & x) const -> bool
    {
        if (x < _lo || x > _hi)
            return false;
        if (x == _lo)
            return lo_closed();
        if (x == _hi)
            return hi_closed();
        return true;
    }

    auto Interval::str() const -> string
    {
        return (lo_closed() ? "[" : "(") + _lo.str() + "," + _hi.str() + (hi_closed() ? "]" : ")");
    }

    auto intersects(const Interval & a, const Interval & b) -> bool
    {
        const auto & left = std::max(a.lo(), b.lo());
        const auto & right = std::min(a.hi(), b.hi());
        if (left < right)
            return true;
        if (right < left)
            return false;
        return a.has_point(left) && b.has_point(left);
    }

    auto contains(const Interval & a, const Interval & b) -> bool
    {
        bool lo_ok = a.lo() < b.lo() || (a.lo() == b.lo() && (a.lo_closed() || ! b.lo_closed()));
        bool hi_ok = b.hi() < a.hi() || (a.hi() == b.hi() && (a.hi_closed() || ! b.hi_closed()));
        return lo_ok && hi_ok;
    }

    auto realizes(const Graph & g, const Representation & rep) -> vector<Mismatch>
    {
        if (static_cast<int>(rep.size()) != g.size())
            throw std::invalid_argument("representation has " + std::to_string(rep.size()) + " intervals for " + std::to_string(g.size()) + " vertices");

        vector<Mismatch> result;
        for (int u = 0; u < g.size(); ++u)
            for (int v = u + 1; v < g.size(); ++v) {
                bool meet = intersects(rep[u], rep[v]);
                if (g.adjacent(u, v) && ! meet)
                    result.push_back({u, v, Mismatch::Kind::missing_edge});
                else if (! g.adjacent(u, v) && meet)
                    result.push_back({u, v, Mismatch::Kind::extra_edge});
            }
        return result;
    }

    auto is_unit(const Representation & rep) -> bool
    {
        return std::all_of(rep.begin(), rep.end(), [] (const Interval & i) { return i.hi() - i.lo() == Rational{1}; });
    }

    auto is_closed_only(const Representation & rep) -> bool
    {
        return std::all_of(rep.begin(), rep.end(), [] (const Interval & i) { return i.is_closed(); });
    }

    auto has_distinct_endpoints(const Representation & rep) -> bool
    {
        vector<Rational> values;
        for (auto & i : rep) {
            values.push_back(i.lo());
            values.push_back(i.hi());
        }
        std::sort(values.begin(), values.end());
        return std::adjacent_find(values.begin(), values.end()) == values.end();
    }

    auto is_mixed_proper(const Representation & rep) -> bool
    {
        for (std::size_t u = 0; u < rep.size(); ++u) {
            if (rep[u].is_closed()) {
                for (std::size_t v = 0; v < rep.size(); ++v)
                    if (u != v && rep[v].is_closed() && rep[u] != rep[v] && contains(rep[v], rep[u]))
                        return false;
            }
            else {
                bool partner = false;
                for (std::size_t v = 0; v < rep.size() && ! partner; ++v)
                    partner = v != u && rep[v].is_closed() && rep[v].lo() == rep[u].lo() && rep[v].hi() == rep[u].hi();
                if (! partner)
                    return false;
            }
        }
        return true;
    }

    auto bad_pairs(const Representation & rep) -> vector<pair<int, int>>
    {
        if (! is_closed_only(rep))
            throw std::invalid_argument("bad pairs are only defined for closed intervals");

        vector<pair<int, int>> result;
        for (std::size_t u = 0; u < rep.size(); ++u)
            for (std::size_t v = 0; v < rep.size(); ++v)
                if (u != v && contains(rep[v], rep[u]))
                    result.emplace_back(static_cast<int>(u), static_cast<int>(v));
        return result;
    }

    auto min_gap(const Representation & rep) -> Rational
    {
        vector<Rational> values;
        for (auto & i : rep) {
            values.push_back(i.lo());
            values.push_back(i.hi());
        }
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        if (values.size() < 2)
            return Rational{0};
        Rational best = values[1] - values[0];
        for (std::size_t i = 2; i < values.size(); ++i)
            best = std::min(best, values[i] - values[i - 1]);
        return best;
    }
}
