// Command-line surface for the library: exact Kostka counts, stretched
// Kostka polynomials, degrees, primitive decompositions, tilings, polytope
// dimensions, and Schur expansions, with optional JSON output.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "kostka/gt.hpp"
#include "kostka/random.hpp"
#include "kostka/serialize.hpp"
#include "kostka/stretch.hpp"
#include "kostka/tiling.hpp"
#include "kostka/weights.hpp"

namespace {

using kostka::ordered_json;

// Malformed weight vectors and inconsistent flags are usage errors (exit
// 2); everything thrown past argument handling is a domain error (exit 1).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

kostka::Composition parse_composition_arg(const std::string& text) {
    try {
        return kostka::Composition::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

kostka::Partition parse_partition_arg(const std::string& text) {
    try {
        return kostka::Partition::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

ordered_json parts_json(const std::vector<long>& parts) {
    return ordered_json(parts);
}

ordered_json rational_vector_json(const kostka::WeightVector& v) {
    ordered_json out = ordered_json::array();
    for (const mpq_class& q : v) out.push_back(q.get_str());
    return out;
}

ordered_json pattern_json(const kostka::GTPattern& x) {
    ordered_json rows = ordered_json::array();
    for (std::size_t j = 1; j <= x.rank(); ++j) {
        ordered_json row = ordered_json::array();
        for (std::size_t i = 1; i <= j; ++i) row.push_back(x.entry(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

void emit(const ordered_json& payload) { std::cout << payload.dump(2) << '\n'; }

struct WeightPairArgs {
    std::string lambda_text;
    std::string beta_text;

    void attach(CLI::App* cmd) {
        cmd->add_option("-l,--lambda", lambda_text, "partition, comma-separated")->required();
        cmd->add_option("-b,--beta", beta_text, "composition, comma-separated")->required();
    }

    std::pair<kostka::Partition, kostka::Composition> parse() const {
        return {parse_partition_arg(lambda_text), parse_composition_arg(beta_text)};
    }
};

int run_kostka(const WeightPairArgs& args, bool verify, bool json) {
    const auto [lambda, beta] = args.parse();
    const mpz_class count = kostka::count_lattice_points(lambda, beta);
    mpz_class oracle;
    if (verify) {
        oracle = kostka::kostka_ssyt(lambda, beta);
        if (oracle != count) {
            std::cerr << "verification failed: lattice-point count " << count.get_str()
                      << " != tableau count " << oracle.get_str() << '\n';
            return 1;
        }
    }
    if (json) {
        ordered_json payload{{"lambda", parts_json(lambda.parts())},
                             {"beta", parts_json(beta.parts())},
                             {"count", count.get_str()}};
        if (verify) {
            payload["ssyt_count"] = oracle.get_str();
            payload["verified"] = true;
        }
        emit(payload);
    } else {
        std::cout << count.get_str() << '\n';
    }
    return 0;
}

int run_poly(const WeightPairArgs& args, long max_n, bool json) {
    const auto [lambda, beta] = args.parse();
    const kostka::RationalPolynomial polynomial = kostka::stretched_polynomial(lambda, beta);

    std::vector<mpz_class> values;
    if (max_n > 0) {
        values = kostka::stretched_values(lambda, beta, max_n);
        for (long n = 1; n <= max_n; ++n) {
            if (polynomial.evaluate(n) != values[static_cast<std::size_t>(n - 1)]) {
                std::cerr << "polynomial disagrees with the count at n = " << n << '\n';
                return 1;
            }
        }
    }
    if (json) {
        ordered_json payload{{"lambda", parts_json(lambda.parts())},
                             {"beta", parts_json(beta.parts())},
                             {"degree", polynomial.is_zero() ? 0 : polynomial.degree()}};
        payload["poly"] = kostka::polynomial_to_json(polynomial);
        if (!values.empty()) {
            ordered_json sampled = ordered_json::array();
            for (const mpz_class& v : values) sampled.push_back(v.get_str());
            payload["values"] = std::move(sampled);
        }
        emit(payload);
    } else {
        std::cout << polynomial.to_string() << '\n';
        for (std::size_t n = 1; n <= values.size(); ++n) {
            std::cout << "K(" << n << ") = " << values[n - 1].get_str() << '\n';
        }
    }
    return 0;
}

int run_degree(const WeightPairArgs& args, bool interpolate_check, bool json) {
    const auto [lambda, beta] = args.parse();
    const long degree = kostka::degree_stretched(lambda, beta);
    long interpolated = -1;
    if (interpolate_check) {
        const kostka::RationalPolynomial polynomial = kostka::stretched_polynomial(lambda, beta);
        interpolated = polynomial.is_zero() ? 0 : static_cast<long>(polynomial.degree());
        if (interpolated != degree) {
            std::cerr << "interpolated degree " << interpolated << " != formula degree " << degree
                      << '\n';
            return 1;
        }
    }
    if (json) {
        ordered_json payload{{"lambda", parts_json(lambda.parts())},
                             {"beta", parts_json(beta.parts())},
                             {"degree", degree}};
        if (interpolate_check) payload["interpolated_degree"] = interpolated;
        emit(payload);
    } else {
        std::cout << degree << '\n';
    }
    return 0;
}

int run_decompose(const WeightPairArgs& args, bool json) {
    const auto [lambda, beta] = args.parse();
    const kostka::PrimitivePairList pieces = kostka::primitive_decomposition(lambda, beta);
    if (json) {
        ordered_json pairs = ordered_json::array();
        for (const kostka::PrimitivePair& piece : pieces.pairs) {
            pairs.push_back(ordered_json{{"lambda", parts_json(piece.lambda.parts())},
                                         {"beta", parts_json(piece.beta.parts())}});
        }
        emit(ordered_json{{"lambda", parts_json(lambda.parts())},
                          {"beta", parts_json(beta.parts())},
                          {"beta_sorted", parts_json(kostka::sort_to_partition(beta).parts())},
                          {"pairs", std::move(pairs)},
                          {"split_indices", pieces.split_indices}});
    } else {
        for (const kostka::PrimitivePair& piece : pieces.pairs) {
            std::cout << piece.lambda.to_string() << " | " << piece.beta.to_string() << '\n';
        }
    }
    return 0;
}

int run_dim(const WeightPairArgs& args, bool json) {
    const auto [lambda, beta] = args.parse();
    const long dim = kostka::dim_gt_polytope(lambda, beta);
    if (json) {
        emit(ordered_json{{"lambda", parts_json(lambda.parts())},
                          {"beta", parts_json(beta.parts())},
                          {"dim", dim}});
    } else {
        std::cout << dim << '\n';
    }
    return 0;
}

int run_schur(const std::string& lambda_text, bool json) {
    const kostka::Partition lambda = parse_partition_arg(lambda_text);
    const auto expansion = kostka::schur_monomials(lambda);
    if (json) {
        ordered_json monomials = ordered_json::array();
        for (const auto& [beta, coefficient] : expansion) {
            monomials.push_back(ordered_json{{"beta", parts_json(beta.parts())},
                                             {"coefficient", coefficient.get_str()}});
        }
        emit(ordered_json{{"lambda", parts_json(lambda.parts())}, {"monomials", std::move(monomials)}});
    } else {
        for (const auto& [beta, coefficient] : expansion) {
            std::cout << beta.to_string() << ": " << coefficient.get_str() << '\n';
        }
    }
    return 0;
}

int run_tiling(const std::string& lambda_text, const std::string& pattern_path,
               std::size_t random_rank, unsigned long seed, bool json) {
    const int sources = (!lambda_text.empty() ? 1 : 0) + (!pattern_path.empty() ? 1 : 0) +
                        (random_rank > 0 ? 1 : 0);
    if (sources != 1) {
        throw UsageError("tiling needs exactly one of --lambda, --pattern, --random");
    }

    kostka::GTPattern pattern = [&] {
        if (!lambda_text.empty()) {
            return kostka::interior_point(parse_partition_arg(lambda_text));
        }
        if (random_rank > 0) {
            std::mt19937_64 engine(seed);
            return kostka::interior_point(kostka::random_rational_partition(engine, random_rank));
        }
        std::ifstream in(pattern_path);
        if (!in) throw UsageError("cannot open pattern file: " + pattern_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return kostka::parse_pattern(buffer.str());
    }();

    const kostka::Tiling tiling = kostka::tiling_of(pattern);
    const kostka::TilingMatrix matrix = kostka::tiling_matrix(tiling);
    const std::size_t kernel = kostka::kernel_dimension(matrix);

    if (json) {
        emit(ordered_json{{"pattern", pattern_json(pattern)},
                          {"hwt", rational_vector_json(pattern.hwt())},
                          {"wt", rational_vector_json(pattern.wt())},
                          {"tiling", kostka::tiling_to_json(tiling)},
                          {"matrix", kostka::matrix_to_json(matrix)},
                          {"kernel_dimension", kernel}});
    } else {
        std::cout << "pattern:\n" << kostka::format_pattern(pattern);
        std::cout << "tiling (" << tiling.tiles().size() << " tiles, " << tiling.free_tile_count()
                  << " free):\n"
                  << kostka::render_tiling(tiling);
        std::cout << "matrix (" << matrix.rows() << " x " << matrix.cols() << "):\n";
        for (std::size_t row = 0; row < matrix.rows(); ++row) {
            for (std::size_t col = 0; col < matrix.cols(); ++col) {
                if (col) std::cout << ' ';
                std::cout << matrix.at(row, col);
            }
            std::cout << '\n';
        }
        std::cout << "kernel dimension: " << kernel << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kostka coefficients via Gelfand-Tsetlin polytopes"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "machine-readable JSON output");

    WeightPairArgs kostka_args, poly_args, degree_args, decompose_args, dim_args;
    bool verify = false;
    long max_n = 0;
    bool interpolate_check = false;
    std::string schur_lambda;
    std::string tiling_lambda, tiling_pattern;
    std::size_t tiling_random = 0;
    unsigned long seed = 1729;

    CLI::App* kostka_cmd = app.add_subcommand("kostka", "exact Kostka coefficient");
    kostka_args.attach(kostka_cmd);
    kostka_cmd->add_flag("--verify", verify, "cross-check against the tableau count");

    CLI::App* poly_cmd = app.add_subcommand("poly", "stretched Kostka polynomial");
    poly_args.attach(poly_cmd);
    poly_cmd->add_option("--max-n", max_n, "also print and validate K(n) for n = 1..N");

    CLI::App* degree_cmd = app.add_subcommand("degree", "degree of the stretched polynomial");
    degree_args.attach(degree_cmd);
    degree_cmd->add_flag("--interpolate", interpolate_check, "cross-check by interpolation");

    CLI::App* decompose_cmd = app.add_subcommand("decompose", "primitive pair decomposition");
    decompose_args.attach(decompose_cmd);

    CLI::App* tiling_cmd = app.add_subcommand("tiling", "tiling, matrix and kernel dimension");
    tiling_cmd->add_option("-l,--lambda", tiling_lambda, "use the interior point of this partition");
    tiling_cmd->add_option("--pattern", tiling_pattern, "pattern file, one row per line, bottom row first");
    tiling_cmd->add_option("--random", tiling_random, "use the interior point of a random rational partition of this length");
    tiling_cmd->add_option("--seed", seed, "seed for --random");

    CLI::App* dim_cmd = app.add_subcommand("dim", "dimension of the GT-polytope");
    dim_args.attach(dim_cmd);

    CLI::App* schur_cmd = app.add_subcommand("schur", "Schur monomial expansion");
    schur_cmd->add_option("-l,--lambda", schur_lambda, "partition, comma-separated")->required();

    for (CLI::App* sub :
         {kostka_cmd, poly_cmd, degree_cmd, decompose_cmd, tiling_cmd, dim_cmd, schur_cmd}) {
        sub->add_flag("--json", json, "machine-readable JSON output");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(kostka_cmd)) return run_kostka(kostka_args, verify, json);
        if (app.got_subcommand(poly_cmd)) return run_poly(poly_args, max_n, json);
        if (app.got_subcommand(degree_cmd)) return run_degree(degree_args, interpolate_check, json);
        if (app.got_subcommand(decompose_cmd)) return run_decompose(decompose_args, json);
        if (app.got_subcommand(tiling_cmd))
            return run_tiling(tiling_lambda, tiling_pattern, tiling_random, seed, json);
        if (app.got_subcommand(dim_cmd)) return run_dim(dim_args, json);
        if (app.got_subcommand(schur_cmd)) return run_schur(schur_lambda, json);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
