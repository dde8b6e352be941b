#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ccg/checks.hpp"
#include "ccg/cliques.hpp"
#include "ccg/compressed.hpp"
#include "ccg/corpus.hpp"
#include "ccg/detect.hpp"
#include "ccg/families.hpp"
#include "ccg/forcing.hpp"
#include "ccg/io.hpp"

namespace {

struct GraphInput {
    std::string family;
    std::string file;

    ccg::Graph load() const {
        if (!family.empty()) return ccg::generate(ccg::FamilySpec::parse(family));
        if (file.empty()) throw CLI::ValidationError("give a graph: --family SPEC or FILE");
        std::ostringstream text;
        if (file == "-") {
            text << std::cin.rdbuf();
        } else {
            std::ifstream in(file);
            if (!in) throw std::runtime_error("cannot open " + file);
            text << in.rdbuf();
        }
        return ccg::parse_graph_auto(text.str());
    }

    void attach(CLI::App* cmd) {
        cmd->add_option("--family", family, "generate the input graph from a family spec");
        cmd->add_option("graph", file, "graph file (edgelist or graph6; '-' for stdin)");
    }
};

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

ccg::GraphFormat parse_format(const std::string& name) {
    auto f = ccg::format_from_name(name);
    if (!f) throw CLI::ValidationError("unknown format '" + name + "'");
    return *f;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clique covers, compressed cliques graphs and positive zero forcing"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a family instance");
    std::string gen_spec, gen_format = "edgelist", gen_out;
    gen->add_option("spec", gen_spec, "family spec, e.g. musical:4 or circ:6:1,2")->required();
    gen->add_option("--format", gen_format, "edgelist|graph6|dot|json");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    // cc
    auto* cc = app.add_subcommand("cc", "minimum clique cover");
    GraphInput cc_in;
    cc_in.attach(cc);
    bool cc_show_cover = false;
    cc->add_flag("--cover", cc_show_cover, "also print one minimum cover");

    // zplus
    auto* zp = app.add_subcommand("zplus", "positive zero forcing number");
    GraphInput zp_in;
    zp_in.attach(zp);
    bool zp_witness = false;
    zp->add_flag("--witness", zp_witness, "also print an optimal set and the forces");

    // z (classic), small extra surface
    auto* zs = app.add_subcommand("z", "classic zero forcing number");
    GraphInput zs_in;
    zs_in.attach(zs);

    // compress
    auto* cp = app.add_subcommand("compress", "compressed cliques graph");
    GraphInput cp_in;
    cp_in.attach(cp);
    std::string cp_format = "edgelist", cp_out;
    cp->add_option("--format", cp_format, "edgelist|graph6|dot|json");
    cp->add_option("--out", cp_out, "output file (default stdout)");

    // detect
    auto* dt = app.add_subcommand("detect", "forbidden-structure report");
    GraphInput dt_in;
    dt_in.attach(dt);

    // check
    auto* ck = app.add_subcommand("check", "run the theorem checks");
    int ck_corpus = 0, ck_jobs = 1, ck_trials = 100, ck_guard = 7;
    double ck_timeout = 30.0;
    std::vector<std::string> ck_families, ck_theorems;
    std::string ck_graph_file, ck_out;
    bool ck_json = false;
    ck->add_option("--corpus", ck_corpus, "all connected graphs with up to N vertices");
    ck->add_option("--family", ck_families, "family instances to check (repeatable)");
    ck->add_option("--graph-file", ck_graph_file, "graph6 file of extra instances");
    ck->add_option("--theorem", ck_theorems, "restrict to these theorem ids (repeatable)");
    ck->add_flag("--json", ck_json, "emit a JSON report");
    ck->add_option("--jobs", ck_jobs, "worker threads");
    ck->add_option("--timeout", ck_timeout, "per-check time budget in seconds");
    ck->add_option("--trials", ck_trials, "random trials for the confluence check");
    ck->add_option("--max-n-guard", ck_guard, "largest corpus size the generator accepts");
    ck->add_option("--out", ck_out, "write the report to a file");
    bool ck_list = false;
    ck->add_flag("--list", ck_list, "list the registered theorem checks and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            ccg::Graph g = ccg::generate(ccg::FamilySpec::parse(gen_spec));
            write_out(gen_out, ccg::emit_graph(g, parse_format(gen_format)));
            return 0;
        }
        if (*cc) {
            ccg::Graph g = cc_in.load();
            ccg::CliqueCover cover = ccg::minimum_cover(g);
            std::cout << cover.size() << "\n";
            if (cc_show_cover)
                for (const auto& cl : cover.cliques) std::cout << ccg::to_string(cl) << "\n";
            return 0;
        }
        if (*zp) {
            ccg::Graph g = zp_in.load();
            ccg::ZplusResult r = ccg::zplus(g);
            std::cout << r.number << "\n";
            if (zp_witness) {
                std::cout << "set " << ccg::to_string(r.optimal) << "\n";
                for (const auto& s : r.record.steps)
                    std::cout << "force " << s.forcer << " -> " << s.forced << " in "
                              << ccg::to_string(s.component) << "\n";
            }
            return 0;
        }
        if (*zs) {
            std::cout << ccg::standard_zero_forcing(zs_in.load()) << "\n";
            return 0;
        }
        if (*cp) {
            ccg::Graph g = cp_in.load();
            ccg::CompressedGraph cg = ccg::compressed_cliques_graph(g);
            write_out(cp_out, ccg::emit_graph(cg.graph, parse_format(cp_format)));
            return 0;
        }
        if (*dt) {
            ccg::Graph g = dt_in.load();
            ccg::CandidateReport r = ccg::check_compressed_candidate(g);
            std::cout << r.summary() << "\n";
            std::cout << (r.admissible() ? "admissible as a compressed cliques graph"
                                         : "not a compressed cliques graph")
                      << "\n";
            return 0;
        }
        if (*ck) {
            if (ck_list) {
                for (const auto& c : ccg::theorem_registry())
                    std::cout << c.id << (c.per_graph() ? "  (per graph)  " : "  (fixtures)   ")
                              << c.statement << "\n";
                return 0;
            }
            ccg::RunOptions opts;
            opts.jobs = ck_jobs;
            opts.confluence_trials = ck_trials;
            opts.timeout = std::chrono::milliseconds(static_cast<long>(ck_timeout * 1000));
            opts.theorems = ck_theorems;
            if (ck_corpus > 0) {
                ccg::Corpus corpus = ccg::generated_corpus(ck_corpus, ck_guard);
                for (auto& g : corpus.graphs)
                    opts.instances.push_back({ccg::to_graph6(g), std::move(g)});
            }
            for (const auto& fam : ck_families)
                opts.instances.push_back({fam, ccg::generate(ccg::FamilySpec::parse(fam))});
            if (!ck_graph_file.empty()) {
                ccg::Corpus corpus = ccg::file_corpus(ck_graph_file);
                for (auto& g : corpus.graphs)
                    opts.instances.push_back({ccg::to_graph6(g), std::move(g)});
            }
            auto results = ccg::run_checks(opts);
            int passed = 0, failed = 0, skipped = 0;
            for (const auto& r : results) {
                if (r.verdict == ccg::Verdict::pass) ++passed;
                else if (r.verdict == ccg::Verdict::fail) ++failed;
                else ++skipped;
            }
            if (ck_json) {
                write_out(ck_out, ccg::results_to_json(results));
            } else {
                std::ostringstream text;
                for (const auto& r : results) text << ccg::result_to_line(r) << "\n";
                text << passed << " passed, " << failed << " failed, " << skipped
                     << " skipped\n";
                write_out(ck_out, text.str());
            }
            return failed == 0 ? 0 : 1;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
