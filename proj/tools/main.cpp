// Command-line front end: score/rank points, evaluate detectors on labeled
// data, sweep AUC over k, generate the synthetic benchmarks, run the
// theoretical validators, and dump KNN graphs.
//
// Exit codes: 0 success, 2 usage error, 3 data error, 4 numeric failure.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "rdos/baselines.hpp"
#include "rdos/core.hpp"
#include "rdos/datagen.hpp"
#include "rdos/density.hpp"
#include "rdos/eval.hpp"
#include "rdos/io.hpp"
#include "rdos/methods.hpp"
#include "rdos/neighbors.hpp"
#include "rdos/parallel.hpp"
#include "rdos/rdos.hpp"
#include "rdos/theory.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitNumeric = 4;

struct CommonOptions {
    std::string input;
    std::string method = "rdos";
    int k = 21;
    double h = 0.01;
    std::string convention = "paper";
    bool no_normalize = false;
    std::string out;
    std::uint64_t seed = 42;
};

rdos::BandwidthConvention parse_convention(const std::string& name) {
    if (name == "paper") return rdos::BandwidthConvention::paper;
    if (name == "standard") return rdos::BandwidthConvention::standard;
    throw std::invalid_argument("unknown bandwidth convention: " + name);
}

rdos::Method require_method(const std::string& name) {
    const auto method = rdos::parse_method(name);
    if (!method) throw std::invalid_argument("unknown method: " + name);
    return *method;
}

rdos::Dataset load_input(const CommonOptions& opt) {
    rdos::Dataset data = rdos::load_csv(opt.input);
    if (!opt.no_normalize) data = rdos::minmax_normalize(data);
    return data;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw rdos::DataError("cannot write " + path);
    return out;
}

// Writes to `--out` when given, stdout otherwise.
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
    if (path.empty()) {
        fn(std::cout);
    } else {
        auto out = open_out(path);
        fn(out);
    }
}

// the width flag is spelled --h, so help must not own the single-dash -h
void claim_help_flag(CLI::App* cmd) {
    cmd->set_help_flag("--help", "print this help message and exit");
}

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_method = true) {
    cmd->add_option("input", opt.input, "input dataset CSV")->required();
    if (with_method) {
        cmd->add_option("--method", opt.method, "detector: rdos, odin, lof, inflo, mnn")
            ->check(CLI::IsMember({"rdos", "odin", "lof", "inflo", "mnn"}));
    }
    cmd->add_option("--k", opt.k, "neighbor count");
    cmd->add_option("--h", opt.h, "kernel width (rdos only)");
    cmd->add_option("--convention", opt.convention, "kernel exponent convention")
        ->check(CLI::IsMember({"paper", "standard"}));
    cmd->add_flag("--no-normalize", opt.no_normalize,
                  "skip per-feature min-max normalization");
    cmd->add_option("--out", opt.out, "output path (stdout when omitted)");
    cmd->add_option("--seed", opt.seed, "random seed");
}

void run_score_or_rank(const CommonOptions& opt, std::optional<double> tau,
                       std::optional<int> top_n) {
    const rdos::Dataset data = load_input(opt);
    rdos::Params params{opt.k, opt.h, tau, top_n};
    rdos::validate_params(params, data.size());

    const rdos::Method method = require_method(opt.method);
    const rdos::KernelSpec spec{opt.h, static_cast<int>(data.dimension()),
                                parse_convention(opt.convention)};
    const rdos::KnnGraph graph = rdos::build_knn_graph_kdtree(data, opt.k);

    std::vector<rdos::ScoreRow> rows;
    if (method == rdos::Method::rdos) {
        const rdos::ScoreReport report = rdos::rdos_scores(data, graph, spec);
        std::vector<bool> flags;
        if (tau) flags = rdos::threshold_detect(report, *tau);
        const auto emit = [&](int i) {
            rdos::ScoreRow row{i, report.rdos(i), report.density(i), std::nullopt};
            if (tau) row.flag = flags[static_cast<std::size_t>(i)];
            rows.push_back(row);
        };
        if (top_n) {
            for (const int i : rdos::top_n(report, *top_n)) emit(i);
        } else {
            for (int i = 0; i < data.size(); ++i) emit(i);
        }
    } else {
        const Eigen::VectorXd scores = rdos::method_scores(data, graph, method, spec);
        if (!scores.allFinite()) {
            throw std::range_error("scores are not finite; input data may be degenerate");
        }
        std::vector<int> order(static_cast<std::size_t>(scores.size()));
        std::iota(order.begin(), order.end(), 0);
        if (top_n) {
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                if (scores(a) != scores(b)) return scores(a) > scores(b);
                return a < b;
            });
            order.resize(static_cast<std::size_t>(*top_n));
        }
        for (const int i : order) {
            rdos::ScoreRow row{i, scores(i), std::nullopt, std::nullopt};
            if (tau) row.flag = scores(i) > *tau;
            rows.push_back(row);
        }
    }
    with_output(opt.out, [&](std::ostream& out) { rdos::write_score_csv(rows, out); });
}

int dispatch(CLI::App& app, int argc, char** argv) {
    CommonOptions score_opt, rank_opt, eval_opt, sweep_opt, dump_opt;
    std::optional<double> tau;
    int top_n_count = 0;
    int threads = 0;

    claim_help_flag(&app);
    app.add_option("--threads", threads, "worker thread cap (0 = machine parallelism)");
    const auto add_subcommand = [&](const char* name, const char* desc) {
        auto* cmd = app.add_subcommand(name, desc);
        claim_help_flag(cmd);
        return cmd;
    };

    auto* score = add_subcommand("score", "score every point");
    add_common(score, score_opt);
    score->add_option("--tau", tau, "flag points with score strictly above this threshold");

    auto* rank = add_subcommand("rank", "emit the top-n most outlying points");
    add_common(rank, rank_opt);
    rank->add_option("--top-n", top_n_count, "row count")->required();

    auto* eval = add_subcommand("eval", "ROC curve and AUC on labeled data");
    add_common(eval, eval_opt);

    auto* sweep = add_subcommand("sweep", "AUC per (method, k) on labeled data");
    std::vector<int> sweep_ks;
    std::vector<std::string> sweep_methods{"rdos", "odin", "lof", "inflo", "mnn"};
    add_common(sweep, sweep_opt, /*with_method=*/false);
    sweep->add_option("--k-values", sweep_ks, "k values to evaluate")->required();
    sweep->add_option("--methods", sweep_methods, "methods to evaluate");

    auto* gen = add_subcommand("gen", "generate a synthetic benchmark CSV");
    std::string gen_variant;
    rdos::SynthSpec synth;
    std::string gen_out;
    std::vector<std::string> gen_outliers;
    bool gen_no_outliers = false;
    gen->add_option("variant", gen_variant, "two_gaussians or cosine")
        ->required()
        ->check(CLI::IsMember({"two_gaussians", "cosine"}));
    gen->add_option("--n-per-cluster", synth.n_per_cluster, "samples per Gaussian cluster");
    gen->add_option("--n-curve", synth.n_curve, "samples along the cosine curve");
    gen->add_option("--cluster-sigma", synth.cluster_sigma, "Gaussian cluster stddev");
    gen->add_option("--noise-sigma2", synth.noise_sigma2, "cosine noise variance");
    gen->add_option("--outlier", gen_outliers,
                    "planted outlier as x,y (repeatable; overrides defaults)");
    gen->add_flag("--no-outliers", gen_no_outliers, "plant no outliers");
    gen->add_option("--seed", synth.seed, "random seed");
    gen->add_option("--out", gen_out, "output path (stdout when omitted)");

    auto* validate = add_subcommand("validate", "Monte Carlo checks of the score theory");
    int validate_theorem = 2;
    int t1_points = 5000, t1_k = 21, t1_seeds = 10;
    double t1_h = 0.01;
    int t2_trials = 10000;
    std::uint64_t validate_seed = 42;
    std::string validate_out;
    std::vector<double> t2_gammas{1.5, 2.0, 3.0};
    std::vector<int> t2_sizes{10, 30};
    std::vector<int> t2_dims{1, 2};
    std::vector<double> t2_widths{0.1, 0.5};
    std::vector<double> t2_radii{0.5, 1.0};
    validate->add_option("--theorem", validate_theorem, "1 (unit mean) or 2 (false-alarm bound)")
        ->check(CLI::IsMember({1, 2}));
    validate->add_option("--n-points", t1_points, "sample size (theorem 1)");
    validate->add_option("--k", t1_k, "neighbor count (theorem 1)");
    validate->add_option("--h", t1_h, "kernel width (theorem 1)");
    validate->add_option("--seeds", t1_seeds, "number of consecutive seeds (theorem 1)");
    validate->add_option("--trials", t2_trials, "Monte Carlo trials per cell (theorem 2)");
    validate->add_option("--gammas", t2_gammas, "score thresholds (theorem 2)");
    validate->add_option("--sizes", t2_sizes, "neighborhood sizes (theorem 2)");
    validate->add_option("--dims", t2_dims, "dimensions (theorem 2)");
    validate->add_option("--widths", t2_widths, "kernel widths (theorem 2)");
    validate->add_option("--radii", t2_radii, "ball radii (theorem 2)");
    validate->add_option("--seed", validate_seed, "base random seed");
    validate->add_option("--out", validate_out, "output path (stdout when omitted)");

    auto* dump = add_subcommand("graph-dump", "write the KNN graph as an edge list");
    add_common(dump, dump_opt, /*with_method=*/false);

    app.require_subcommand(1);
    app.parse(argc, argv);
    rdos::parallel::set_max_threads(threads);

    if (score->parsed()) {
        run_score_or_rank(score_opt, tau, std::nullopt);
    } else if (rank->parsed()) {
        run_score_or_rank(rank_opt, std::nullopt, top_n_count);
    } else if (eval->parsed()) {
        const rdos::Dataset data = load_input(eval_opt);
        if (!data.has_labels()) throw rdos::DataError("eval requires a label column");
        rdos::validate_params({eval_opt.k, eval_opt.h, {}, {}}, data.size());
        const rdos::KernelSpec spec{eval_opt.h, static_cast<int>(data.dimension()),
                                    parse_convention(eval_opt.convention)};
        const rdos::KnnGraph graph = rdos::build_knn_graph_kdtree(data, eval_opt.k);
        const Eigen::VectorXd scores =
            rdos::method_scores(data, graph, require_method(eval_opt.method), spec);
        const rdos::RocCurve curve = rdos::roc_auc(scores, data.labels);
        with_output(eval_opt.out, [&](std::ostream& out) {
            out << "fpr,tpr\n";
            for (const auto& [fpr, tpr] : curve.points) {
                out << rdos::format_score(fpr) << ',' << rdos::format_score(tpr) << '\n';
            }
        });
        std::cerr << "auc=" << rdos::format_score(curve.auc) << '\n';
    } else if (sweep->parsed()) {
        const rdos::Dataset data = load_input(sweep_opt);
        if (!data.has_labels()) throw rdos::DataError("sweep requires a label column");
        for (const int k : sweep_ks) {
            rdos::validate_params({k, sweep_opt.h, {}, {}}, data.size());
        }
        const rdos::KernelSpec spec{sweep_opt.h, static_cast<int>(data.dimension()),
                                    parse_convention(sweep_opt.convention)};
        with_output(sweep_opt.out, [&](std::ostream& out) {
            out << "k,method,auc\n";
            for (const int k : sweep_ks) {
                const rdos::KnnGraph graph = rdos::build_knn_graph_kdtree(data, k);
                for (const auto& name : sweep_methods) {
                    const Eigen::VectorXd scores =
                        rdos::method_scores(data, graph, require_method(name), spec);
                    out << k << ',' << name << ','
                        << rdos::format_score(rdos::roc_auc(scores, data.labels).auc) << '\n';
                }
            }
        });
    } else if (gen->parsed()) {
        if (gen_no_outliers && !gen_outliers.empty()) {
            throw std::invalid_argument("--no-outliers conflicts with --outlier");
        }
        if (gen_no_outliers) {
            synth.outliers = Eigen::MatrixXd(0, 2);
        } else if (!gen_outliers.empty()) {
            Eigen::MatrixXd pts(static_cast<Eigen::Index>(gen_outliers.size()), 2);
            for (std::size_t i = 0; i < gen_outliers.size(); ++i) {
                const auto& text = gen_outliers[i];
                const auto comma = text.find(',');
                try {
                    if (comma == std::string::npos) throw std::invalid_argument(text);
                    pts(static_cast<Eigen::Index>(i), 0) = std::stod(text.substr(0, comma));
                    pts(static_cast<Eigen::Index>(i), 1) = std::stod(text.substr(comma + 1));
                } catch (const std::exception&) {
                    throw std::invalid_argument("--outlier expects x,y; got '" + text + "'");
                }
            }
            synth.outliers = std::move(pts);
        }
        synth.variant = gen_variant == "cosine" ? rdos::SynthVariant::cosine
                                                : rdos::SynthVariant::two_gaussians;
        const rdos::Dataset data = rdos::gen_synthetic(synth);
        with_output(gen_out, [&](std::ostream& out) { rdos::save_dataset_csv(data, out); });
    } else if (validate->parsed()) {
        with_output(validate_out, [&](std::ostream& out) {
            if (validate_theorem == 1) {
                const rdos::KernelSpec spec{t1_h, 2, rdos::BandwidthConvention::paper};
                out << "n_points,k,h,seed,interior_count,mean_rdos,std_rdos\n";
                for (int s = 0; s < t1_seeds; ++s) {
                    const auto stats =
                        rdos::validate_theorem1(t1_points, t1_k, spec, validate_seed + s);
                    out << t1_points << ',' << t1_k << ',' << rdos::format_score(t1_h) << ','
                        << validate_seed + s << ',' << stats.interior_count << ','
                        << rdos::format_score(stats.mean_rdos) << ','
                        << rdos::format_score(stats.std_rdos) << '\n';
                }
            } else {
                out << "gamma,s,d,h,r,trials,empirical_rate,bound\n";
                for (const double g : t2_gammas)
                    for (const int s : t2_sizes)
                        for (const int d : t2_dims)
                            for (const double h : t2_widths)
                                for (const double r : t2_radii) {
                                    const rdos::BoundInput in{g, s, d, h, r};
                                    const auto res =
                                        rdos::validate_theorem2(t2_trials, in, validate_seed);
                                    out << rdos::format_score(g) << ',' << s << ',' << d << ','
                                        << rdos::format_score(h) << ',' << rdos::format_score(r)
                                        << ',' << t2_trials << ','
                                        << rdos::format_score(res.empirical_rate) << ','
                                        << rdos::format_score(res.bound) << '\n';
                                }
            }
        });
    } else if (dump->parsed()) {
        const rdos::Dataset data = load_input(dump_opt);
        rdos::validate_params({dump_opt.k, dump_opt.h, {}, {}}, data.size());
        const rdos::KnnGraph graph = rdos::build_knn_graph_kdtree(data, dump_opt.k);
        with_output(dump_opt.out, [&](std::ostream& out) { rdos::write_edge_list(graph, out); });
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local density-based outlier detection"};
    try {
        return dispatch(app, argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const rdos::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    }
}
