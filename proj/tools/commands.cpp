#include "commands.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bsc/copula.hpp"
#include "bsc/io.hpp"
#include "bsc/moments.hpp"
#include "bsc/verify.hpp"

namespace bsc::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

BsplineCopula make_copula(int degree, int spans, const std::string& kind,
                          const std::string& matrix_path) {
    BasisSystem basis{KnotVector::uniform(degree, spans)};
    if (kind == "maxcorr")
        return BsplineCopula(basis, ParameterMatrix::diagonal(basis.weights()));
    if (kind == "indep")
        return BsplineCopula(basis,
                             ParameterMatrix::independence(basis.weights(), basis.weights()));
    if (kind == "file") {
        if (matrix_path.empty()) throw std::runtime_error("--copula file requires --R <path>");
        int n = 0;
        std::vector<double> entries = read_square_matrix_csv_file(matrix_path, n);
        if (n != basis.size())
            throw std::runtime_error("matrix size " + std::to_string(n) +
                                     " does not match basis size " + std::to_string(basis.size()));
        std::vector<double> q(basis.weights().begin(), basis.weights().end());
        return BsplineCopula(basis, ParameterMatrix::validated(std::move(entries), std::move(q)));
    }
    throw std::runtime_error("unknown copula '" + kind + "' (use maxcorr, indep or file)");
}

// One table cell: closed form when m >= d, direct computation when
// 1 <= m < d, no value when m < 1.
bool table_cell(int n, int d, double& out) {
    const int m = n - d;
    if (m < 1) return false;
    if (m >= d) {
        out = closed_form_max_correlation(n, d);
    } else {
        MaxCorrCopula copula(BasisSystem(KnotVector::uniform(d, m)));
        out = copula.correlation();
    }
    return true;
}

}  // namespace

std::string run_table(const TableOptions& options) {
    if (options.n_max < 2) throw std::runtime_error("table: --n-max must be >= 2");
    for (int d : options.degrees)
        if (d < 0) throw std::runtime_error("table: degrees must be >= 0");

    if (options.format == "json") {
        ordered_json rows = ordered_json::array();
        for (int n = 2; n <= options.n_max; ++n) {
            ordered_json row;
            row["n"] = n;
            row["bernstein"] = 1.0 - 2.0 / (n + 1.0);
            for (int d : options.degrees) {
                double value = 0.0;
                const std::string key = "d=" + std::to_string(d);
                if (table_cell(n, d, value))
                    row[key] = value;
                else
                    row[key] = nullptr;
            }
            rows.push_back(std::move(row));
        }
        ordered_json doc;
        doc["rows"] = std::move(rows);
        return doc.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "n,bernstein";
    for (int d : options.degrees) os << ",d=" << d;
    os << "\n";
    for (int n = 2; n <= options.n_max; ++n) {
        os << n << "," << format_3(1.0 - 2.0 / (n + 1.0));
        for (int d : options.degrees) {
            double value = 0.0;
            if (table_cell(n, d, value))
                os << "," << format_3(value);
            else
                os << ",NA";
        }
        os << "\n";
    }
    return os.str();
}

std::string run_eval(const EvalOptions& options) {
    if (options.grid < 2) throw std::runtime_error("eval: --grid must be >= 2");
    BsplineCopula copula = make_copula(options.degree, options.spans, options.copula,
                                       options.matrix_path);
    const int g = options.grid;

    if (options.format == "json") {
        ordered_json rows = ordered_json::array();
        for (int i = 0; i <= g; ++i)
            for (int j = 0; j <= g; ++j) {
                const double u = static_cast<double>(i) / g;
                const double v = static_cast<double>(j) / g;
                rows.push_back({{"u", u},
                                {"v", v},
                                {"C", copula.cdf(u, v)},
                                {"c", copula.density(u, v)}});
            }
        ordered_json doc;
        doc["rows"] = std::move(rows);
        return doc.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "u,v,C,c\n";
    for (int i = 0; i <= g; ++i)
        for (int j = 0; j <= g; ++j) {
            const double u = static_cast<double>(i) / g;
            const double v = static_cast<double>(j) / g;
            os << format_full(u) << "," << format_full(v) << "," << format_full(copula.cdf(u, v))
               << "," << format_full(copula.density(u, v)) << "\n";
        }
    return os.str();
}

std::string run_sample(const SampleOptions& options) {
    if (options.count < 0) throw std::runtime_error("sample: --count must be >= 0");
    BsplineCopula copula = make_copula(options.degree, options.spans, options.copula,
                                       options.matrix_path);
    auto pairs = copula.sample(options.count, options.seed);

    if (options.format == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& [u, v] : pairs) rows.push_back({{"u", u}, {"v", v}});
        ordered_json doc;
        doc["rows"] = std::move(rows);
        return doc.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "u,v\n";
    for (const auto& [u, v] : pairs)
        os << format_full(u) << "," << format_full(v) << "\n";
    return os.str();
}

std::string run_moments(const MomentsOptions& options) {
    const Rational value = basis_moment_closed(options.degree, options.index, options.power);
    const Rational check = basis_moment_recurrence(options.degree, options.index, options.power);
    if (value != check)
        throw std::runtime_error("moment routes disagree; this is a bug");
    if (options.format == "csv") {
        std::ostringstream os;
        os << "d,i,h,value,decimal\n"
           << options.degree << "," << options.index << "," << options.power << ","
           << to_fraction_string(value) << "," << format_full(to_double(value)) << "\n";
        return os.str();
    }
    ordered_json doc;
    doc["d"] = options.degree;
    doc["i"] = options.index;
    doc["h"] = options.power;
    doc["value"] = to_fraction_string(value);
    doc["decimal"] = to_double(value);
    return doc.dump(2) + "\n";
}

VerifyOutcome run_verify(const VerifyOptions& options) {
    SuiteResult result;
    if (options.suite == "tp") {
        TpSuiteOptions opts;
        opts.seed = options.seed;
        if (options.trials > 0) opts.trials = options.trials;
        if (options.degree >= 0) opts.max_degree = options.degree;
        if (!options.spans.empty()) opts.max_spans = options.spans.back();
        result = run_tp_suite(opts);
    } else if (options.suite == "fh-convergence") {
        FhSuiteOptions opts;
        if (options.degree >= 0) opts.degrees = {options.degree};
        if (!options.spans.empty()) opts.spans = options.spans;
        if (options.grid > 1) opts.grid = options.grid;
        result = run_fh_convergence_suite(opts);
    } else if (options.suite == "identities") {
        IdentitySuiteOptions opts;
        opts.seed = options.seed;
        if (options.n_max > 0) opts.stirling_n_max = options.n_max;
        if (options.instances > 0) opts.minor_instances = options.instances;
        result = run_identity_suite(opts);
    } else if (options.suite == "lemma31") {
        WeightConsistencyOptions opts;
        if (options.degree >= 0) opts.max_degree = options.degree;
        if (!options.spans.empty()) opts.max_spans = options.spans.back();
        result = run_weight_consistency_suite(opts);
    } else if (options.suite == "conjecture") {
        RandomKnotOptions opts;
        opts.seed = options.seed;
        if (options.degree >= 0) opts.degree = options.degree;
        if (!options.spans.empty()) opts.spans = options.spans;
        result = run_random_knot_exploration(opts);
    } else {
        throw std::runtime_error("unknown suite '" + options.suite +
                                 "' (tp, fh-convergence, identities, lemma31, conjecture)");
    }

    VerifyOutcome outcome;
    outcome.pass = result.pass;
    if (options.format == "csv") {
        std::ostringstream os;
        os << "check,pass,value,detail\n";
        for (const auto& c : result.checks)
            os << '"' << c.name << '"' << "," << (c.pass ? "true" : "false") << ","
               << format_full(c.value) << "," << '"' << c.detail << '"' << "\n";
        outcome.text = os.str();
        return outcome;
    }
    ordered_json checks = ordered_json::array();
    for (const auto& c : result.checks) {
        if (c.is_tp_record) {
            checks.push_back({{"kernel", c.kernel},
                              {"n", c.n},
                              {"d", c.d},
                              {"r", c.r},
                              {"trials", c.trials},
                              {"minScaledDet", c.value},
                              {"pass", c.pass}});
        } else {
            ordered_json item{{"name", c.name}, {"pass", c.pass}, {"value", c.value}};
            if (!c.detail.empty()) item["detail"] = c.detail;
            checks.push_back(std::move(item));
        }
    }
    ordered_json doc;
    doc["suite"] = result.suite;
    doc["seed"] = options.seed;
    doc["pass"] = result.pass;
    doc["checks"] = std::move(checks);
    outcome.text = doc.dump(2) + "\n";
    return outcome;
}

}  // namespace bsc::cli
