#include <muig/serialize.hh>
#include <muig/errors.hh>

#include <algorithm>
#include <sstream>

using nlohmann::ordered_json;
using std::string;
using std::string_view;

namespace muig
{
    auto representation_to_json(const Representation & rep) -> ordered_json
    {
        auto result = ordered_json::object();
        for (std::size_t v = 0; v < rep.size(); ++v)
            result[std::to_string(v)] = {{"lo", rep[v].lo().str()}, {"hi", rep[v].hi().str()}, {"type", boundary_name(rep[v].type())}};
        return result;
    }

    auto representation_from_json(string_view text) -> Representation
    {
        ordered_json doc;
        try {
            doc = ordered_json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            auto byte = e.byte > 0 ? e.byte - 1 : 0;
            auto line = 1 + std::count(text.begin(), text.begin() + std::min(byte, text.size()), '\n');
            throw ParseError("malformed JSON", static_cast<std::size_t>(line), byte);
        }

        if (doc.is_object() && doc.contains("representation"))
            doc = doc["representation"];
        if (! doc.is_object())
            throw ParseError("representation must be a JSON object", 1, 0);

        const std::size_t n = doc.size();
        Representation rep;
        for (std::size_t v = 0; v < n; ++v) {
            auto key = std::to_string(v);
            if (! doc.contains(key))
                throw ParseError("representation has no interval for vertex " + key, 1, 0);
            auto & entry = doc[key];
            try {
                rep.emplace_back(Rational::parse(entry.at("lo").get<string>()), Rational::parse(entry.at("hi").get<string>()),
                        parse_boundary(entry.at("type").get<string>()));
            }
            catch (const std::exception & e) {
                throw ParseError("vertex " + key + ": " + e.what(), 1, 0);
            }
        }
        return rep;
    }

    auto embedding_to_json(const Embedding & e) -> ordered_json
    {
        auto map = ordered_json::object();
        for (std::size_t i = 0; i < e.map.size(); ++i)
            map[std::to_string(i)] = e.map[i];
        return {{"family", e.family.name()}, {"params", e.family.params}, {"map", map}};
    }

    auto certificate_to_json(const Certificate & c) -> ordered_json
    {
        ordered_json doc;
        doc["verdict"] = verdict_name(c.verdict);
        if (c.rep)
            doc["representation"] = representation_to_json(*c.rep);
        if (c.embedding)
            doc["embedding"] = embedding_to_json(*c.embedding);

        auto & t = c.transcript;
        ordered_json transcript;
        transcript["vertices"] = t.vertices;
        transcript["checks"] = t.checks;
        if (c.verdict == Verdict::mixed_unit) {
            transcript["quotient_vertices"] = t.quotient_vertices;
            transcript["initial_bad_pairs"] = t.initial_bad_pairs;
            transcript["repair_moves"] = t.repair_moves;
            transcript["bad_pairs"] = t.bad_pairs;
            auto chains = ordered_json::array();
            for (auto & s : t.chains)
                chains.push_back({{"u", s.u}, {"v", s.v}, {"lmax", s.lmax}, {"rmax", s.rmax}});
            transcript["chains"] = chains;
            transcript["quotient_mixed"] = representation_to_json(t.quotient_mixed);
        }
        doc["transcript"] = transcript;
        return doc;
    }

    auto census_to_json(const CensusReport & r) -> ordered_json
    {
        auto rows = ordered_json::array();
        for (auto & row : r.rows) {
            ordered_json j;
            j["line"] = row.line;
            j["graph6"] = row.code;
            if (row.parse_error) {
                j["parse_error"] = *row.parse_error;
                rows.push_back(j);
                continue;
            }
            j["vertices"] = row.vertices;
            j["interval"] = row.interval;
            j["characterization"] = row.characterization;
            j["oracle"] = row.oracle ? ordered_json(*row.oracle) : ordered_json(nullptr);
            j["builder"] = row.builder;
            j["discrepancy"] = row.discrepancy;
            rows.push_back(j);
        }

        auto & c = r.counts;
        return {{"rows", rows},
            {"counts", {{"graphs", c.graphs}, {"parse_errors", c.parse_errors}, {"interval", c.interval},
                {"mixed_unit", c.mixed_unit}, {"oracle_checked", c.oracle_checked},
                {"builder_errors", c.builder_errors}, {"discrepancies", c.discrepancies}}}};
    }

    auto census_summary(const CensusReport & r) -> string
    {
        std::ostringstream s;
        auto & c = r.counts;
        auto row = [&] (const string & name, long value) {
            s << name << string(18 - std::min<std::size_t>(name.size(), 17), ' ') << value << '\n';
        };
        row("graphs", c.graphs);
        row("parse errors", c.parse_errors);
        row("interval", c.interval);
        row("mixed unit", c.mixed_unit);
        row("oracle checked", c.oracle_checked);
        row("builder errors", c.builder_errors);
        row("discrepancies", c.discrepancies);
        for (auto & rw : r.rows) {
            if (rw.parse_error)
                s << "line " << rw.line << ": " << *rw.parse_error << '\n';
            else if (rw.discrepancy)
                s << "line " << rw.line << ": discrepancy on " << rw.code << " (characterization "
                  << rw.characterization << ", oracle " << (rw.oracle ? (*rw.oracle ? "1" : "0") : "-")
                  << ", builder " << rw.builder << ")\n";
        }
        return s.str();
    }
}
