// brickforge: matching covered graph analysis, reduction and generation.
//
// Subcommands mirror the library: analyze, decompose, reduce, iso, make,
// generate, verify. Graphs travel as mcg/1 text; reports are JSON.
// Exit codes: 0 success, 1 usage or parse error, 2 cap exceeded,
// 3 theorem violation / verification counterexample.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "mcg/engine.hpp"
#include "mcg/io.hpp"
#include "mcg/report.hpp"

namespace {

using mcg::json;

mcg::McgFile load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return mcg::read_mcg(in);
}

mcg::Family family_from_name(const std::string& name) {
    using mcg::Family;
    static const std::map<std::string, Family> names = {
        {"truncated_biwheel", Family::truncated_biwheel},
        {"prism", Family::prism},
        {"mobius_ladder", Family::mobius_ladder},
        {"staircase", Family::staircase},
        {"pseudo_biwheel", Family::pseudo_biwheel},
        {"double_biwheel_I", Family::double_biwheel_1},
        {"double_ladder_I", Family::double_ladder_1},
        {"laddered_biwheel_I", Family::laddered_biwheel_1},
        {"double_biwheel_II", Family::double_biwheel_2},
        {"double_ladder_II", Family::double_ladder_2},
        {"laddered_biwheel_II", Family::laddered_biwheel_2},
        {"odd_wheel", Family::odd_wheel},
        {"petersen", Family::petersen},
    };
    auto it = names.find(name);
    if (it == names.end()) throw CLI::ValidationError("unknown family '" + name + "'");
    return it->second;
}

std::vector<std::pair<mcg::EdgeId, mcg::EdgeId>> doubleton_pairs(
    const std::vector<mcg::Doubleton>& ds) {
    std::vector<std::pair<mcg::EdgeId, mcg::EdgeId>> out;
    for (const mcg::Doubleton& r : ds) out.emplace_back(r.alpha, r.beta);
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"matching covered graphs: bricks, doubletons, thin edges"};
    app.require_subcommand(1);

    std::string in_path, in_path2, out_path, family_name_arg;
    std::vector<int> family_params;
    int max_order = 10;
    int jobs = 1;
    bool large = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "full JSON report for one graph");
    analyze_cmd->add_option("file", in_path, "mcg/1 input")->required();

    auto* decompose_cmd = app.add_subcommand("decompose", "tight cut decomposition");
    decompose_cmd->add_option("file", in_path, "mcg/1 input")->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "strictly R-thin reduction trace");
    reduce_cmd->add_option("file", in_path, "mcg/1 input")->required();

    auto* iso_cmd = app.add_subcommand("iso", "isomorphism test with witness");
    iso_cmd->add_option("file1", in_path, "first graph")->required();
    iso_cmd->add_option("file2", in_path2, "second graph")->required();

    auto* make_cmd = app.add_subcommand("make", "emit a family member as mcg/1");
    make_cmd->add_option("family", family_name_arg, "family name")->required();
    make_cmd->add_option("params", family_params, "family parameters");
    make_cmd->add_option("--out", out_path, "write to file instead of stdout");

    auto* generate_cmd = app.add_subcommand("generate", "generation closure up to an order");
    generate_cmd->add_option("--max-order", max_order, "largest order")->required();
    generate_cmd->add_option("--out", out_path, "output directory")->required();
    generate_cmd->add_option("--jobs", jobs, "worker threads");
    generate_cmd->add_flag("--large", large, "allow max-order 14 (slow)");

    auto* verify_cmd = app.add_subcommand("verify", "run every corpus-level check");
    verify_cmd->add_option("--max-order", max_order, "largest order");
    verify_cmd->add_option("--jobs", jobs, "worker threads");
    verify_cmd->add_flag("--large", large, "allow max-order 14 (slow)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors normalize to 1
    }

    if (*analyze_cmd) {
        std::cout << mcg::analyze(load(in_path).graph).dump(2) << "\n";
        return 0;
    }
    if (*decompose_cmd) {
        std::cout << mcg::decompose_json(load(in_path).graph).dump(2) << "\n";
        return 0;
    }
    if (*reduce_cmd) {
        mcg::McgFile file = load(in_path);
        std::optional<mcg::Doubleton> r;
        if (!file.doubletons.empty()) {
            r = mcg::make_doubleton(file.graph, file.doubletons[0].first,
                                    file.doubletons[0].second);
            if (!r) throw std::runtime_error("file doubleton is not removable");
        } else {
            auto ds = mcg::removable_doubletons(file.graph);
            if (ds.empty()) throw std::runtime_error("graph has no removable doubleton");
            r = ds.front();
        }
        std::cout << mcg::reduce_json(file.graph, *r).dump(2) << "\n";
        return 0;
    }
    if (*iso_cmd) {
        std::cout << mcg::iso_json(load(in_path).graph, load(in_path2).graph).dump(2) << "\n";
        return 0;
    }
    if (*make_cmd) {
        mcg::FamilyMember m = mcg::make_family({family_from_name(family_name_arg), family_params});
        std::string text = mcg::to_mcg(m.graph, doubleton_pairs(m.doubletons));
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            out << text;
        }
        return 0;
    }
    if (*generate_cmd) {
        mcg::Corpus corpus = mcg::generate_corpus(max_order, jobs, large);
        std::filesystem::create_directories(out_path);
        json manifest;
        manifest["schema"] = mcg::kSchema;
        manifest["max_order"] = max_order;
        json files = json::array();
        std::map<int, int> index_by_order;
        for (const auto& [form, entry] : corpus) {
            int idx = index_by_order[entry.graph.order()]++;
            std::string name =
                "n" + std::to_string(entry.graph.order()) + "_" + std::to_string(idx) + ".mcg";
            std::ofstream out(std::filesystem::path(out_path) / name);
            out << mcg::to_mcg(entry.graph, doubleton_pairs(entry.doubletons));
            files.push_back({{"file", name},
                             {"order", entry.graph.order()},
                             {"size", entry.graph.size()},
                             {"doubletons", int(entry.doubletons.size())}});
        }
        manifest["graphs"] = files;
        manifest["count"] = int(corpus.size());
        std::ofstream mf(std::filesystem::path(out_path) / "manifest.json");
        mf << manifest.dump(2) << "\n";
        std::cout << "wrote " << corpus.size() << " graphs to " << out_path << "\n";
        return 0;
    }
    if (*verify_cmd) {
        mcg::Corpus corpus = mcg::generate_corpus(max_order, jobs, large);
        struct Check {
            const char* name;
            mcg::VerificationReport rep;
        };
        std::vector<Check> checks = {
            {"strictly-R-thin-free members lie in the eleven families",
             mcg::verify_thm_free_implies_family(corpus)},
            {"compatible-strictly-thin-free members lie in the eight families",
             mcg::verify_thm_compatible_strictly_thin(corpus)},
            {"R-thin edges locate in R-configurations",
             mcg::verify_r_configuration_theorems(corpus)},
            {"reduction terminates on the whole corpus",
             mcg::verify_reduction_totality(corpus)},
        };
        bool ok = true;
        std::cout << "corpus: " << corpus.size() << " graphs up to order " << max_order << "\n";
        for (const Check& c : checks) {
            ok = ok && c.rep.ok();
            std::cout << (c.rep.ok() ? "PASS " : "FAIL ") << c.name << " (" << c.rep.graphs
                      << " graphs";
            if (c.rep.pairs) std::cout << ", " << c.rep.pairs << " pairs";
            std::cout << ")\n";
            for (const std::string& cex : c.rep.counterexamples)
                std::cout << "  counterexample: " << cex << "\n";
        }
        return ok ? 0 : 3;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const mcg::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const mcg::cap_exceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 2;
    } catch (const mcg::theorem_violation& e) {
        std::cerr << "theorem violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
