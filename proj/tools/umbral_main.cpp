#include <CLI11.hpp>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include "umbral/capelli.hpp"
#include "umbral/delta.hpp"
#include "umbral/errors.hpp"
#include "umbral/partition.hpp"
#include "umbral/schur.hpp"
#include "umbral/verify.hpp"

namespace {

using namespace umbral;

DeltaOperator parse_op(const std::string& s) {
    if (s == "d") return DeltaOperator::differentiation();
    if (s == "fwd") return DeltaOperator::forward_difference();
    if (s == "bwd") return DeltaOperator::backward_difference();
    if (s == "ctr") return DeltaOperator::central_difference();
    if (s.rfind("series:", 0) == 0) {
        std::vector<Rational> coeffs{Rational(1)};
        std::string cur;
        for (char ch : s.substr(7)) {
            if (ch == ',') {
                coeffs.push_back(Rational::parse(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!cur.empty()) coeffs.push_back(Rational::parse(cur));
        return DeltaOperator::generic_series(std::move(coeffs));
    }
    throw CLI::ValidationError("--op", "expected d|fwd|bwd|ctr|series:a2,a3,...");
}

Partition parse_partition(const std::string& s) {
    if (s.empty() || s == "0") return Partition();
    return Partition::parse(s);
}

int cmd_seq(const std::string& op_str, long n, long upto, bool star, int window) {
    const SequencePtr seq = make_sequence(parse_op(op_str));
    if (upto < n) upto = n;
    for (long m = n; m <= upto; ++m) {
        if (m >= 0) {
            const UniPoly p = star ? seq->conj(static_cast<int>(m)) : seq->basic(static_cast<int>(m));
            std::cout << p.str() << "\n";
        } else if (seq->op().is_builtin()) {
            const RationalFunction f = star ? seq->conj_ratfun(m) : seq->basic_ratfun(m);
            std::cout << f.str() << "\n";
        } else {
            const LaurentTail t = star ? seq->conj_tail(m, window) : seq->basic_tail(m, window);
            std::cout << t.str() << "\n";
        }
    }
    return 0;
}

int cmd_schur(const std::string& op_str, int nvars, const std::string& lambda_str, bool star) {
    const SchurContext ctx{make_sequence(parse_op(op_str)), nvars};
    const Partition lam = parse_partition(lambda_str);
    std::cout << schur_poly(ctx, lam.padded(nvars), star).str() << "\n";
    return 0;
}

int cmd_coeff(const std::string& op_str, int nvars, const std::string& lambda_str,
              const std::string& mu_str, bool hat, bool star) {
    const SequencePtr seq = make_sequence(parse_op(op_str));
    const Partition lam = parse_partition(lambda_str), mu = parse_partition(mu_str);
    UniPoly d;
    if (hat) {
        d = dhat_coeff(seq, lam, mu, star);
    } else {
        const SchurContext ctx{seq, nvars};
        d = d_coeff(ctx, lam, mu, star);
    }
    std::cout << d.str("u") << "\n";
    return 0;
}

int cmd_eigen(const std::string& algebra, int nvars, const std::string& lambda_str, int k,
              const std::string& u_str, const std::string& kind) {
    const Partition lam = parse_partition(lambda_str);
    const Rational u = Rational::parse(u_str);
    Rational value;
    if (algebra == "gl") {
        const GlKind gk = (kind == "d") ? GlKind::D : GlKind::C;
        value = eigen_gl({Algebra::gl, nvars, lam}, k, u, gk);
    } else if (algebra == "o") {
        if (kind == "d") throw CLI::ValidationError("--kind", "o supports only the determinant family");
        value = eigen_o({Algebra::o, nvars, lam}, k, u);
    } else if (algebra == "sp") {
        if (kind == "c") throw CLI::ValidationError("--kind", "sp supports only the permanent family");
        value = eigen_sp({Algebra::sp, nvars, lam}, k, u);
    } else {
        throw CLI::ValidationError("--algebra", "expected gl|o|sp");
    }
    std::cout << value.str() << "\n";
    return 0;
}

int cmd_verify(const std::string& profile, const std::string& filter, const std::string& format,
               long seed, bool has_seed) {
    RunOptions opts;
    opts.full = profile == "full";
    opts.filter = filter;
    if (has_seed) opts.seed = static_cast<uint64_t>(seed);
    const bool structured = format == "structured";
    const auto reports = run_all(opts, [&](const VerificationReport& r) {
        std::cout << (structured ? to_json_line(r) : to_line(r)) << "\n";
    });
    const Summary s = summarize(reports);
    if (!structured) {
        if (s.failed == 0)
            std::cout << "ALL PASS (" << s.total() << " items"
                      << (s.skipped ? ", " + std::to_string(s.skipped) + " skipped" : "") << ")\n";
        else
            std::cout << "FAILURES: " << s.failed << " of " << s.total() << " items\n";
    }
    return s.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Schur-type functions of binomial-type polynomial sequences"};
    app.require_subcommand(1);

    std::string op_str = "d", lambda_str, mu_str, algebra = "gl", u_str = "0";
    std::string profile = "quick", filter, format = "text", kind;
    int nvars = 1, k = 0, window = 24;
    long n = 0, upto = std::numeric_limits<long>::min(), seed = 0;
    bool star = false, hat = false;

    auto* seq_cmd = app.add_subcommand("seq", "Print basic or conjugate polynomials p_n, p*_n");
    seq_cmd->add_option("--op", op_str, "d|fwd|bwd|ctr|series:a2,a3,...");
    seq_cmd->add_option("--n", n, "index (negative allowed)")->required();
    seq_cmd->add_option("--upto", upto, "print the whole range n..upto");
    seq_cmd->add_flag("--star", star, "conjugate sequence p*_n");
    seq_cmd->add_option("--window", window, "series window for generic operators")
        ->check(CLI::Range(4, 1 << 20));

    auto* schur_cmd = app.add_subcommand("schur", "Print a Schur-type polynomial");
    schur_cmd->add_option("--op", op_str, "d|fwd|bwd|ctr|series:a2,a3,...");
    schur_cmd->add_option("--n-vars", nvars, "number of variables")->required();
    schur_cmd->add_option("--lambda", lambda_str, "partition, e.g. 2,1");
    schur_cmd->add_flag("--star", star, "conjugate family s*");

    auto* coeff_cmd = app.add_subcommand("coeff", "Print a shift-expansion coefficient in u");
    coeff_cmd->add_option("--op", op_str, "d|fwd|bwd|ctr|series:a2,a3,...");
    coeff_cmd->add_option("--n-vars", nvars, "number of variables (plain coefficients)");
    coeff_cmd->add_option("--lambda", lambda_str, "partition");
    coeff_cmd->add_option("--mu", mu_str, "partition");
    coeff_cmd->add_flag("--hat", hat, "size-stable normalization");
    coeff_cmd->add_flag("--star", star, "use the conjugate sequence");

    auto* eigen_cmd = app.add_subcommand("eigen", "Capelli-type eigenvalues as exact fractions");
    eigen_cmd->add_option("--algebra", algebra, "gl|o|sp")->required();
    eigen_cmd->add_option("--n-vars", nvars, "matrix size N")->required();
    eigen_cmd->add_option("--lambda", lambda_str, "highest weight partition");
    eigen_cmd->add_option("--k", k, "degree")->required();
    eigen_cmd->add_option("--u", u_str, "shift parameter (rational)");
    eigen_cmd->add_option("--kind", kind, "c (determinant) | d (permanent), gl only");

    auto* verify_cmd = app.add_subcommand("verify", "Machine-verify the identity catalogue");
    verify_cmd->add_option("--profile", profile, "quick|full");
    verify_cmd->add_option("--filter", filter, "only identities whose id contains this substring");
    verify_cmd->add_option("--format", format, "text|structured");
    auto* seed_opt = verify_cmd->add_option("--seed", seed, "randomized specialization points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (seq_cmd->parsed()) return cmd_seq(op_str, n, upto, star, window);
        if (schur_cmd->parsed()) return cmd_schur(op_str, nvars, lambda_str, star);
        if (coeff_cmd->parsed()) return cmd_coeff(op_str, nvars, lambda_str, mu_str, hat, star);
        if (eigen_cmd->parsed()) return cmd_eigen(algebra, nvars, lambda_str, k, u_str, kind);
        if (verify_cmd->parsed())
            return cmd_verify(profile, filter, format, seed, seed_opt->count() > 0);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
