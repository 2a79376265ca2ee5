// fk: compute Dirichlet eigenvalues of Z^2 subgraphs, symmetrize shapes,
// search for minimizers, and run the continuum comparison experiments.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fk/continuum.hpp"
#include "fk/enumerate.hpp"
#include "fk/reports.hpp"
#include "fk/search.hpp"
#include "fk/shape_io.hpp"
#include "fk/spectral.hpp"
#include "fk/svg.hpp"
#include "fk/symmetry.hpp"
#include "fk/walk.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& out_path, const std::string& data) {
    if (out_path.empty()) {
        std::cout << data;
        if (!data.empty() && data.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << data;
    }
}

fk::Subgraph load_shape(const std::string& path) {
    return fk::parse_shape(read_file(path));
}

fk::Cell parse_cell_arg(const std::string& s) {
    int x = 0, y = 0;
    char comma = 0;
    std::istringstream ss(s);
    if (!(ss >> x >> comma >> y) || comma != ',')
        throw std::invalid_argument("expected a cell as x,y: " + s);
    return fk::Cell{x, y};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirichlet eigenvalues and shape experiments on Z^2 subgraphs"};
    app.require_subcommand(1);

    std::string shape_path, shape_path_b, out_path, svg_dir, start_arg;
    double tol = fk::kDefaultTol;
    int n = 4, m = 16, k_steps = 100, spu = 512;
    long trials = 0;
    uint64_t seed = 1;
    std::string axis_arg = "horizontal", sign_arg = "positive", mode_arg = "exhaustive";
    std::vector<int> n_list;
    bool transport = false, heat = false, refine = false;

    CLI::App* spectrum = app.add_subcommand("spectrum", "smallest Dirichlet eigenvalue");
    spectrum->add_option("shape", shape_path, "shape file (text or JSON)")->required();
    spectrum->add_option("--tol", tol, "residual tolerance");
    spectrum->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* symmetrize = app.add_subcommand("symmetrize", "discrete Steiner symmetrization");
    symmetrize->add_option("shape", shape_path)->required();
    symmetrize->add_option("--axis", axis_arg, "horizontal|vertical|diagonal");
    symmetrize->add_option("--sign", sign_arg, "positive|negative");
    symmetrize->add_flag("--transport", transport,
                         "also transport the principal eigenfunction");
    symmetrize->add_option("--out", out_path);

    CLI::App* search = app.add_subcommand("search", "eigenvalue-minimizing polyominoes");
    search->add_option("--n", n, "polyomino size")->required();
    search->add_option("--mode", mode_arg, "exhaustive|pruned");
    search->add_option("--out", out_path);
    search->add_option("--svg-dir", svg_dir, "write one SVG per minimizer");

    CLI::App* disk = app.add_subcommand("disk", "discrete disk convergence experiment");
    disk->add_option("--n-list", n_list, "disk sizes")->required()->delimiter(',');
    disk->add_option("--m", m, "fd refinement (0 skips the fd line)");
    disk->add_option("--spu", spu, "symdiff samples per unit");
    disk->add_flag("--refine-center", refine, "local center search for the symdiff");
    disk->add_option("--out", out_path);

    CLI::App* sandwich =
        app.add_subcommand("sandwich", "discrete-to-continuum eigenvalue sandwich");
    sandwich->add_option("shape", shape_path)->required();
    sandwich->add_option("--m", m, "fd refinement (uses m and 2m)");
    sandwich->add_option("--out", out_path);

    CLI::App* walk = app.add_subcommand("walk", "absorbing random walk survival");
    walk->add_option("shape", shape_path)->required();
    walk->add_option("shape_b", shape_path_b, "second shape: report the decay ratio");
    walk->add_option("--k", k_steps, "steps");
    walk->add_option("--trials", trials, "Monte Carlo trials (0 = exact only)");
    walk->add_option("--seed", seed, "Monte Carlo seed");
    walk->add_option("--start", start_arg, "start cell as x,y");
    walk->add_option("--out", out_path);

    CLI::App* render = app.add_subcommand("render", "SVG of a shape or spectrum report");
    render->add_option("input", shape_path, "shape file or spectrum JSON")->required();
    render->add_flag("--heat", heat, "color by eigenfunction (computed if absent)");
    render->add_option("--out", out_path);

    try {
        app.parse(argc, argv);

        if (spectrum->parsed()) {
            fk::Subgraph g = load_shape(shape_path);
            if (tol <= 0) throw std::invalid_argument("tol must be positive");
            fk::SpectralReport rep = fk::lambda_d(g, tol);
            write_output(out_path, fk::report_to_json(rep).dump(2));
        } else if (symmetrize->parsed()) {
            fk::Subgraph g = load_shape(shape_path);
            std::vector<double> f;
            const std::vector<double>* fp = nullptr;
            if (transport) {
                f = fk::lambda_d(g).eigenfunction;
                fp = &f;
            }
            auto outcome = [&]() -> fk::SymmetrizationOutcome {
                if (axis_arg == "diagonal") return fk::symmetrize_diagonal(g, fp);
                if (axis_arg != "vertical" && axis_arg != "horizontal")
                    throw std::invalid_argument("unknown axis: " + axis_arg);
                fk::Axis axis = axis_arg == "vertical" ? fk::Axis::vertical
                                                       : fk::Axis::horizontal;
                fk::Sign sign;
                if (sign_arg == "positive")
                    sign = fk::Sign::positive;
                else if (sign_arg == "negative")
                    sign = fk::Sign::negative;
                else
                    throw std::invalid_argument("unknown sign: " + sign_arg);
                return fk::symmetrize_axis(g, axis, sign, fp);
            };
            write_output(out_path, fk::outcome_to_json(g, outcome()).dump(2));
        } else if (search->parsed()) {
            fk::SearchMode mode;
            if (mode_arg == "exhaustive")
                mode = fk::SearchMode::exhaustive;
            else if (mode_arg == "pruned")
                mode = fk::SearchMode::pruned;
            else
                throw std::invalid_argument("unknown mode: " + mode_arg);
            fk::MinimizerRecord rec = fk::find_minimizers(n, mode);
            if (!svg_dir.empty())
                for (std::size_t i = 0; i < rec.minimizers.size(); ++i)
                    write_output(svg_dir + "/minimizer_" + std::to_string(n) + "_" +
                                     std::to_string(i) + ".svg",
                                 fk::render_svg(rec.minimizers[i]));
            write_output(out_path, fk::record_to_json(rec).dump(2));
        } else if (disk->parsed()) {
            auto reports = fk::disk_convergence(n_list, m, spu);
            if (refine)
                for (auto& r : reports)
                    r.symdiff_area =
                        fk::symdiff_vs_disk(fk::discrete_disk(r.n), spu, true);
            write_output(out_path, fk::disks_to_json(reports).dump(2));
        } else if (sandwich->parsed()) {
            fk::Subgraph g = load_shape(shape_path);
            write_output(out_path,
                         fk::sandwich_to_json(fk::sandwich_check(g, m)).dump(2));
        } else if (walk->parsed()) {
            fk::Subgraph g = load_shape(shape_path);
            if (!shape_path_b.empty()) {
                fk::Subgraph h = load_shape(shape_path_b);
                fk::DecayReport rep = fk::decay_ratio(g, h, k_steps);
                write_output(out_path, fk::decay_to_json(rep).dump(2));
            } else {
                fk::Cell start =
                    start_arg.empty() ? g.cells()[0] : parse_cell_arg(start_arg);
                fk::SurvivalCurve exact = fk::survival_exact(g, start, k_steps);
                if (trials > 0) {
                    fk::SurvivalCurve mc =
                        fk::survival_mc(g, start, k_steps, trials, seed);
                    write_output(out_path, fk::curves_to_csv(&exact, &mc));
                } else {
                    write_output(out_path, fk::curves_to_csv(&exact, nullptr));
                }
            }
        } else if (render->parsed()) {
            std::string text = read_file(shape_path);
            nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
            fk::RenderOptions opt;
            std::vector<double> values;
            if (!j.is_discarded() && j.is_object() && j.contains("eigenfunction")) {
                std::vector<fk::Cell> cells;
                for (const auto& e : j["eigenfunction"]) {
                    cells.push_back({e[0].get<int>(), e[1].get<int>()});
                    values.push_back(e[2].get<double>());
                }
                fk::Subgraph g((std::move(cells)));
                opt.heat = &values;
                write_output(out_path, fk::render_svg(g, opt));
            } else {
                fk::Subgraph g = fk::parse_shape(text);
                if (heat) {
                    values = fk::lambda_d(g).eigenfunction;
                    opt.heat = &values;
                }
                write_output(out_path, fk::render_svg(g, opt));
            }
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const fk::SolverError& e) {
        std::cerr << "error: " << e.what() << " (best estimate " << e.best_lambda
                  << ", residual " << e.residual << ")\n";
        return 2;
    } catch (const fk::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
