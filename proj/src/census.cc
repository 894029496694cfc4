#include <muig/census.hh>
#include <muig/builder.hh>
#include <muig/catalog.hh>
#include <muig/errors.hh>
#include <muig/graph_io.hh>
#include <muig/oracle.hh>
#include <muig/recognizer.hh>

#include <atomic>
#include <thread>

using std::string;
using std::string_view;
using std::vector;

namespace muig
{
    auto census_row(std::size_t line, string_view code, int oracle_bound) -> CensusRow
    {
        CensusRow row;
        row.line = line;
        row.code = string(code);

        Graph g;
        try {
            g = parse_graph(code, GraphFormat::graph6);
        }
        catch (const std::exception & e) {
            row.parse_error = e.what();
            return row;
        }

        row.vertices = g.size();
        row.interval = recognize_interval(g).has_value();
        row.characterization = row.interval && ! find_forbidden(g, ForbiddenList::general);
        if (g.size() <= oracle_bound)
            row.oracle = oracle_mixed_unit(g, OracleOptions{oracle_bound, std::nullopt}).has_value();

        bool builder_yes = false;
        try {
            auto cert = build_certificate(g);
            row.builder = verdict_name(cert.verdict);
            builder_yes = cert.verdict == Verdict::mixed_unit;
        }
        catch (const std::exception & e) {
            row.builder = string("error: ") + e.what();
        }

        row.discrepancy = (row.oracle && *row.oracle != row.characterization)
            || row.builder.starts_with("error")
            || builder_yes != row.characterization;
        return row;
    }

    auto run_census(string_view stream, const CensusOptions & options) -> CensusReport
    {
        vector<std::pair<std::size_t, string_view>> lines;
        std::size_t start = 0, line_no = 0;
        while (start < stream.size()) {
            ++line_no;
            auto nl = stream.find('\n', start);
            auto end = nl == string_view::npos ? stream.size() : nl;
            auto text = stream.substr(start, end - start);
            while (! text.empty() && (text.back() == '\r' || text.back() == ' '))
                text.remove_suffix(1);
            if (! text.empty())
                lines.emplace_back(line_no, text);
            start = end + 1;
        }

        CensusReport report;
        report.rows.resize(lines.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < lines.size(); i = next++)
                report.rows[i] = census_row(lines[i].first, lines[i].second, options.oracle_bound);
        };

        int jobs = std::max(1, options.jobs);
        vector<std::thread> threads;
        for (int j = 1; j < jobs; ++j)
            threads.emplace_back(worker);
        worker();
        for (auto & t : threads)
            t.join();

        auto & c = report.counts;
        for (auto & row : report.rows) {
            ++c.graphs;
            if (row.parse_error) {
                ++c.parse_errors;
                continue;
            }
            c.interval += row.interval;
            c.mixed_unit += row.characterization;
            c.oracle_checked += row.oracle.has_value();
            c.builder_errors += row.builder.starts_with("error");
            c.discrepancies += row.discrepancy;
        }
        return report;
    }
}
