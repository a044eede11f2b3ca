#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "svf/bench.hpp"
#include "svf/chains.hpp"
#include "svf/io.hpp"
#include "svf/reconstruct.hpp"
#include "svf/svf_model.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitReconstruction = 2;

void emit(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        svf::write_file_atomic(out, text);
    }
}

std::vector<std::size_t> parse_n_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != item.size() || v == 0) throw svf::DomainError("bad --n-list entry '" + item + "'");
        if (!out.empty() && v <= out.back()) throw svf::DomainError("--n-list must be strictly ascending");
        out.push_back(v);
    }
    if (out.empty()) throw svf::DomainError("--n-list is empty");
    return out;
}

svf::MethodParams method_params(const std::string& method, std::size_t k, std::size_t r) {
    svf::MethodParams p;
    p.method = svf::parse_method(method);
    p.k = k;
    p.r = r;
    if (k < 1 || r < 1) throw svf::DomainError("--k and --r must be positive");
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reconstruction of set-valued functions from samples"};
    app.require_subcommand(1);

    std::string model;
    std::string nodes = "chebyshev";
    std::size_t n = 20;
    std::string in;
    std::string out;
    std::string method = "metric-poly";
    std::size_t k = 3;
    std::size_t r = 4;
    std::string n_list;
    std::size_t grid = 0;

    auto* sample_cmd = app.add_subcommand("sample", "Sample a built-in model");
    sample_cmd->add_option("--model", model, "FA, FB or FC")->required();
    sample_cmd->add_option("--nodes", nodes, "chebyshev or uniform")->check(CLI::IsMember({"chebyshev", "uniform"}));
    sample_cmd->add_option("--n", n, "N (N+1 nodes)")->required();
    sample_cmd->add_option("--out", out, "output JSON file (- for stdout)");

    auto* rec_cmd = app.add_subcommand("reconstruct", "Reconstruct from a sample file");
    rec_cmd->add_option("--in", in, "sample JSON file")->required();
    rec_cmd->add_option("--method", method, "metric-poly, c4 or holder")->required();
    rec_cmd->add_option("--k", k, "PCT stencil size (holder)");
    rec_cmd->add_option("--r", r, "half-power terms (holder)");
    rec_cmd->add_option("--out", out, "output approximant JSON (- for stdout)");

    auto* sweep_cmd = app.add_subcommand("sweep", "Maximum-error sweep over N");
    sweep_cmd->add_option("--model", model, "FA, FB or FC")->required();
    sweep_cmd->add_option("--method", method, "metric-poly, c4 or holder")->required();
    sweep_cmd->add_option("--n-list", n_list, "comma separated N values")->required();
    sweep_cmd->add_option("--grid", grid, "evaluation grid size (default 2N for metric-poly, 400 otherwise)");
    sweep_cmd->add_option("--k", k, "PCT stencil size (holder)");
    sweep_cmd->add_option("--r", r, "half-power terms (holder)");
    sweep_cmd->add_option("--out", out, "output CSV file (- for stdout)");

    auto* pct_cmd = app.add_subcommand("pct-error", "Closing-point error per N");
    pct_cmd->add_option("--model", model, "FA, FB or FC")->required();
    pct_cmd->add_option("--method", method, "metric-poly, c4 or holder")->required();
    pct_cmd->add_option("--n-list", n_list, "comma separated N values")->required();
    pct_cmd->add_option("--k", k, "PCT stencil size (holder)");
    pct_cmd->add_option("--r", r, "half-power terms (holder)");
    pct_cmd->add_option("--out", out, "output CSV file (- for stdout)");

    auto* dump_cmd = app.add_subcommand("dump-chains", "Print the chain forest of a sample file");
    dump_cmd->add_option("--in", in, "sample JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (*sample_cmd) {
            const svf::SvfModel m = svf::builtin(model);
            const svf::Partition p =
                nodes == "uniform" ? svf::uniform_partition(n, m.a, m.b) : svf::chebyshev_partition(n, m.a, m.b);
            emit(out, svf::sample_set_to_json(svf::sample(m, p)));
        } else if (*rec_cmd) {
            const svf::MethodParams params = method_params(method, k, r);
            const svf::SampleSet s = svf::sample_set_from_json(svf::read_file(in));
            const svf::Approximant A = svf::reconstruct(s, params);
            for (const auto& w : A.warnings) std::cerr << "warning: " << w << "\n";
            emit(out, svf::approximant_to_json(A));
        } else if (*sweep_cmd || *pct_cmd) {
            const svf::MethodParams params = method_params(method, k, r);
            const svf::SvfModel m = svf::builtin(model);
            const auto ns = parse_n_list(n_list);
            const svf::ErrorReport report = *sweep_cmd ? svf::sweep(m, params, ns, grid) : svf::pct_sweep(m, params, ns);
            for (const auto& rec : report.records) {
                if (!rec.failure.empty()) std::cerr << "N = " << rec.n << ": " << rec.failure << "\n";
            }
            emit(out, svf::to_csv(report));
        } else if (*dump_cmd) {
            const svf::SampleSet s = svf::sample_set_from_json(svf::read_file(in));
            svf::build_chain_forest(s).dump(std::cout);
        }
    } catch (const svf::ReconstructionError& e) {
        std::cerr << "reconstruction error: " << e.what() << "\n";
        return kExitReconstruction;
    } catch (const svf::ClassificationError& e) {
        std::cerr << "reconstruction error: " << e.what() << "\n";
        return kExitReconstruction;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
