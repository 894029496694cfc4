#include <muig/builder.hh>
#include <muig/catalog.hh>
#include <muig/census.hh>
#include <muig/errors.hh>
#include <muig/graph_io.hh>
#include <muig/recognizer.hh>
#include <muig/serialize.hh>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace muig;

using std::cerr;
using std::cout;
using std::string;
using std::vector;

namespace
{
    enum Exit
    {
        exit_ok = 0,
        exit_negative = 1,
        exit_input = 2,
        exit_internal = 3
    };

    auto read_input(const string & path) -> string
    {
        if (path == "-")
            return {std::istreambuf_iterator<char>(std::cin), {}};
        std::ifstream in(path, std::ios::binary);
        if (! in)
            throw std::invalid_argument("cannot read '" + path + "'");
        return {std::istreambuf_iterator<char>(in), {}};
    }

    auto load_graph(const string & path, const string & format) -> Graph
    {
        auto text = read_input(path);
        return parse_graph(text, format == "auto" ? guess_format(text) : parse_format(format));
    }

    // Write to a sibling temporary and rename, so a failure leaves no partial file.
    void write_file(const string & path, const string & contents)
    {
        auto tmp = path + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (! out)
                throw std::invalid_argument("cannot write '" + path + "'");
            out << contents;
            if (! out)
                throw std::invalid_argument("cannot write '" + path + "'");
        }
        std::filesystem::rename(tmp, path);
    }

    auto vertex_list(const vector<int> & vs) -> string
    {
        string s;
        for (auto v : vs)
            s += (s.empty() ? "" : " ") + std::to_string(v);
        return s;
    }

    auto recognize(const Graph & g, ForbiddenList list, bool json) -> int
    {
        std::optional<Embedding> hit;
        Verdict verdict = Verdict::not_interval;
        if (recognize_interval(g)) {
            if (list == ForbiddenList::general)
                hit = find_forbidden(g, list);
            else {
                // the twin-free list speaks about the twin quotient
                auto q = twin_quotient(g);
                hit = find_forbidden(q.graph, list);
                if (hit)
                    for (auto & x : hit->map)
                        x = q.partition.representative(x);
            }
            verdict = hit ? Verdict::not_mixed_unit : Verdict::mixed_unit;
        }

        if (json) {
            nlohmann::ordered_json doc;
            doc["verdict"] = verdict_name(verdict);
            doc["list"] = list_name(list);
            if (hit)
                doc["embedding"] = embedding_to_json(*hit);
            cout << doc.dump(2) << '\n';
        }
        else if (hit)
            cout << verdict_name(verdict) << ": " << hit->family.name() << " at vertices " << vertex_list(hit->map) << '\n';
        else
            cout << verdict_name(verdict) << '\n';

        return verdict == Verdict::mixed_unit ? exit_ok : exit_negative;
    }

    auto represent(const Graph & g, const string & out_path) -> int
    {
        auto cert = build_certificate(g);
        auto doc = certificate_to_json(cert).dump(2) + "\n";
        if (cert.verdict != Verdict::mixed_unit) {
            cerr << doc;
            return exit_negative;
        }
        if (out_path.empty() || out_path == "-")
            cout << doc;
        else
            write_file(out_path, doc);
        return exit_ok;
    }

    auto verify(const Graph & g, const string & rep_path) -> int
    {
        auto rep = representation_from_json(read_input(rep_path));
        if (static_cast<int>(rep.size()) != g.size()) {
            cerr << "representation has " << rep.size() << " intervals, graph has " << g.size() << " vertices\n";
            return exit_input;
        }
        auto bad = realizes(g, rep);
        if (bad.empty()) {
            cout << "ok" << (is_unit(rep) ? " unit" : "") << '\n';
            return exit_ok;
        }
        cout << "mismatch\n";
        for (auto & m : bad)
            cout << (m.kind == Mismatch::Kind::missing_edge ? "missing-edge " : "extra-edge ") << m.u << ' ' << m.v << '\n';
        return exit_negative;
    }

    auto generate_cmd(const string & family, const vector<int> & params, const string & format, bool labels) -> int
    {
        FamilyId id{parse_family(family), params};
        auto g = generate(id);
        auto fmt = parse_format(format);
        auto text = emit_graph(g, fmt);
        cout << text << (fmt == GraphFormat::graph6 ? "\n" : "");
        if (labels)
            for (int v = 0; v < g.size(); ++v)
                cerr << v << ' ' << g.label(v) << '\n';
        return exit_ok;
    }

    auto census_cmd(const string & path, int bound, int jobs, const string & report_path) -> int
    {
        auto report = run_census(read_input(path), {bound, jobs});
        if (! report_path.empty()) {
            auto doc = census_to_json(report).dump(1) + "\n";
            if (report_path == "-")
                cout << doc;
            else
                write_file(report_path, doc);
        }
        cout << census_summary(report);
        return report.counts.discrepancies == 0 ? exit_ok : exit_negative;
    }

    auto default_jobs() -> int
    {
        if (auto env = std::getenv("MUIG_JOBS"))
            try {
                return std::max(1, std::stoi(env));
            }
            catch (const std::exception &) {
            }
        return 1;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Recognize mixed unit interval graphs and produce certificates"};
    app.require_subcommand(1);

    string input, format = "auto", list = "maincoro";
    bool json = false;

    auto * rec = app.add_subcommand("recognize", "Decide mixed unit interval membership");
    rec->add_option("input", input, "Graph file, or - for stdin")->required();
    rec->add_option("--format", format, "graph6, edge-list or auto")->capture_default_str();
    rec->add_option("--list", list, "Forbidden list: maincoro (any graph) or mainthm (applied to the twin quotient)")->capture_default_str();
    rec->add_flag("--json", json, "Print a JSON document");

    string out;
    auto * rep = app.add_subcommand("represent", "Write a verified unit representation");
    rep->add_option("input", input, "Graph file, or - for stdin")->required();
    rep->add_option("--format", format, "graph6, edge-list or auto")->capture_default_str();
    rep->add_option("--out", out, "Output file (default stdout)");

    string rep_path;
    auto * ver = app.add_subcommand("verify", "Check a representation against a graph");
    ver->add_option("graph", input, "Graph file")->required();
    ver->add_option("representation", rep_path, "Representation or certificate JSON")->required();
    ver->add_option("--format", format, "graph6, edge-list or auto")->capture_default_str();

    string family, gen_format = "edge-list";
    vector<int> params;
    bool labels = false;
    auto * gen = app.add_subcommand("generate", "Emit a named family member");
    gen->add_option("family", family, "K13 K14 K14star K23star K24star R S Sprime Sdoubleprime T Q G1 Fig2")->required();
    gen->add_option("params", params, "Family parameters");
    gen->add_option("--format", gen_format, "graph6 or edge-list")->capture_default_str();
    gen->add_flag("--labels", labels, "Print vertex role labels to stderr");

    int bound = 7, jobs = default_jobs();
    string report;
    auto * cen = app.add_subcommand("census", "Cross-check characterization, oracle and builder over a graph6 stream");
    cen->add_option("input", input, "graph6 file, one code per line, or - for stdin")->required();
    cen->add_option("--oracle-bound", bound, "Largest vertex count given to the oracle")->capture_default_str();
    cen->add_option("--jobs", jobs, "Worker threads (default from MUIG_JOBS, else 1)")->capture_default_str();
    cen->add_option("--report", report, "Write the JSON report here (- for stdout)");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (rec->parsed())
            return recognize(load_graph(input, format), parse_list(list), json);
        if (rep->parsed())
            return represent(load_graph(input, format), out);
        if (ver->parsed())
            return verify(load_graph(input, format), rep_path);
        if (gen->parsed())
            return generate_cmd(family, params, gen_format, labels);
        if (cen->parsed())
            return census_cmd(input, bound, jobs, report);
    }
    catch (const InternalInconsistency & e) {
        cerr << e.what() << '\n';
        return exit_internal;
    }
    catch (const std::exception & e) {
        cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
