#include "nradius/verify.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "nradius/matrix_io.hpp"
#include "nradius/rng.hpp"

namespace nradius {

namespace {

using json = nlohmann::json;

ComplexMatrix ginibre(GaussianStream& g, int d) {
    ComplexMatrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j) {
            const double re = g.next();
            const double im = g.next();
            m(i, j) = Complex(re, im);
        }
    return m;
}

ComplexMatrix haar_unitary(GaussianStream& g, int d) {
    ComplexMatrix m = ginibre(g, d);
    Eigen::HouseholderQR<ComplexMatrix> qr(m);
    ComplexMatrix qmat = qr.householderQ() * ComplexMatrix::Identity(d, d);
    ComplexMatrix rmat = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < d; ++j) {
        Complex rd = rmat(j, j);
        if (rd != Complex(0, 0)) qmat.col(j) *= rd / std::abs(rd);
    }
    return qmat;
}

ComplexMatrix draw_matrix(EnsembleKind kind, int d, GaussianStream& g) {
    switch (kind) {
        case EnsembleKind::GinibreComplex:
            return ginibre(g, d);
        case EnsembleKind::Hermitian: {
            ComplexMatrix m = ginibre(g, d);
            return (m + m.adjoint()) / 2.0;
        }
        case EnsembleKind::Psd: {
            ComplexMatrix m = ginibre(g, d);
            return m.adjoint() * m;
        }
        case EnsembleKind::Normal: {
            ComplexMatrix u = haar_unitary(g, d);
            ComplexVector lam(d);
            for (Eigen::Index i = 0; i < d; ++i) {
                const double re = g.next();
                const double im = g.next();
                lam[i] = Complex(re, im);
            }
            return u * lam.asDiagonal() * u.adjoint();
        }
        case EnsembleKind::NilpotentSqZero: {
            // strictly block-upper: [[0, B], [0, 0]] so A^2 = 0
            const int d1 = d / 2;
            ComplexMatrix m = ComplexMatrix::Zero(d, d);
            for (Eigen::Index i = 0; i < d1; ++i)
                for (Eigen::Index j = d1; j < d; ++j) {
                    const double re = g.next();
                    const double im = g.next();
                    m(i, j) = Complex(re, im);
                }
            return m;
        }
        case EnsembleKind::NonnegEntrywise: {
            ComplexMatrix m(d, d);
            for (Eigen::Index i = 0; i < d; ++i)
                for (Eigen::Index j = 0; j < d; ++j) m(i, j) = std::abs(g.next());
            return m;
        }
        case EnsembleKind::Unitary:
            return haar_unitary(g, d);
    }
    throw BadDimError("generate: unknown ensemble kind");
}

std::uint64_t trial_seed(std::uint64_t base, const std::string& bound_id, int trial) {
    return mix64(base ^ mix64(fnv1a(bound_id) +
                              static_cast<std::uint64_t>(trial) * 0x9e3779b97f4a7c15ULL));
}

BoundInput draw_input(const BoundDescriptor& d, EnsembleKind kind, int dim, int n,
                      GaussianStream& g) {
    auto one = [&] { return draw_matrix(kind, dim, g); };
    switch (d.input_shape) {
        case InputShape::Single:
            return BoundInput::single(one());
        case InputShape::Pair:
            return BoundInput::pair(one(), one());
        case InputShape::Blocks2x2:
            return BoundInput::blocks2x2(one(), one(), one(), one());
        case InputShape::BlocksNxN: {
            std::vector<ComplexMatrix> blocks;
            blocks.reserve(static_cast<std::size_t>(n) * n);
            for (int i = 0; i < n * n; ++i) blocks.push_back(one());
            return BoundInput::blocks_nxn(std::move(blocks));
        }
        case InputShape::SingleRow: {
            std::vector<ComplexMatrix> blocks;
            const int k = std::max(n, 2);
            for (int i = 0; i < k; ++i) blocks.push_back(one());
            return BoundInput::single_row(std::move(blocks));
        }
        case InputShape::TripleAXB: {
            const ComplexMatrix z = ComplexMatrix::Zero(dim, dim);
            auto off = [&](const ComplexMatrix& b1, const ComplexMatrix& b2) {
                ComplexMatrix m(2 * dim, 2 * dim);
                m << z, b1, b2, z;
                return m;
            };
            auto diag = [&](const ComplexMatrix& b1, const ComplexMatrix& b2) {
                ComplexMatrix m(2 * dim, 2 * dim);
                m << b1, z, z, b2;
                return m;
            };
            if (d.id == "half-power-chain") {
                // PSD diagonal blocks for the positive-operator bound
                auto psd = [&] {
                    ComplexMatrix m = one();
                    return ComplexMatrix(m.adjoint() * m);
                };
                return BoundInput::triple(diag(psd(), psd()), diag(one(), one()),
                                          diag(psd(), psd()));
            }
            return BoundInput::triple(off(one(), one()), off(one(), one()), off(one(), one()));
        }
        case InputShape::TripleList: {
            std::vector<ComplexMatrix> flat;
            for (int i = 0; i < std::max(n, 1); ++i) {
                flat.push_back(one());
                flat.push_back(one());
                flat.push_back(one());
            }
            return BoundInput::triple_list(std::move(flat));
        }
    }
    throw ShapeMismatchError("draw_input: unknown shape");
}

BoundParams params_from_json(const json& j) {
    BoundParams p;
    if (j.contains("alpha")) p.alpha = Complex(j["alpha"][0].get<double>(), j["alpha"][1].get<double>());
    if (j.contains("beta")) p.beta = j["beta"].get<double>();
    if (j.contains("mu")) p.mu = j["mu"].get<double>();
    if (j.contains("lambda")) p.lambda_exp = j["lambda"].get<double>();
    if (j.contains("r")) p.r = j["r"].get<double>();
    if (j.contains("s")) p.s = j["s"].get<double>();
    if (j.contains("n")) p.n = j["n"].get<int>();
    if (j.contains("p")) p.p = j["p"].get<double>();
    if (j.contains("q")) p.q = j["q"].get<double>();
    return p;
}

std::string json_num(double v) { return format_g17(v); }

void write_params_json(std::ostream& os, const BoundParams& p) {
    os << '{';
    bool first = true;
    auto emit = [&](const char* key, const std::string& val) {
        if (!first) os << ',';
        os << '"' << key << "\":" << val;
        first = false;
    };
    if (p.alpha) emit("alpha", "[" + json_num(p.alpha->real()) + "," + json_num(p.alpha->imag()) + "]");
    if (p.beta) emit("beta", json_num(*p.beta));
    if (p.mu) emit("mu", json_num(*p.mu));
    if (p.lambda_exp) emit("lambda", json_num(*p.lambda_exp));
    if (p.r) emit("r", json_num(*p.r));
    if (p.s) emit("s", json_num(*p.s));
    if (p.n) emit("n", std::to_string(*p.n));
    if (p.p) emit("p", json_num(*p.p));
    if (p.q) emit("q", json_num(*p.q));
    os << '}';
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace

std::string ensemble_kind_name(EnsembleKind k) {
    switch (k) {
        case EnsembleKind::GinibreComplex: return "ginibre-complex";
        case EnsembleKind::Hermitian: return "hermitian";
        case EnsembleKind::Psd: return "psd";
        case EnsembleKind::Normal: return "normal";
        case EnsembleKind::NilpotentSqZero: return "nilpotent-sq-zero";
        case EnsembleKind::NonnegEntrywise: return "nonneg-entrywise";
        case EnsembleKind::Unitary: return "unitary";
    }
    return "unknown";
}

EnsembleKind ensemble_kind_from_name(const std::string& name) {
    if (name == "ginibre-complex" || name == "ginibre") return EnsembleKind::GinibreComplex;
    if (name == "hermitian") return EnsembleKind::Hermitian;
    if (name == "psd") return EnsembleKind::Psd;
    if (name == "normal") return EnsembleKind::Normal;
    if (name == "nilpotent-sq-zero" || name == "nilpotent") return EnsembleKind::NilpotentSqZero;
    if (name == "nonneg-entrywise" || name == "nonneg") return EnsembleKind::NonnegEntrywise;
    if (name == "unitary") return EnsembleKind::Unitary;
    throw BadDimError("unknown ensemble kind: " + name);
}

std::vector<ComplexMatrix> generate(const EnsembleSpec& spec) {
    if (spec.dim < 1 || spec.dim > 16) throw BadDimError("generate: dim must lie in 1..16");
    if (spec.count < 0) throw BadDimError("generate: count must be >= 0");
    GaussianStream g(spec.seed);
    std::vector<ComplexMatrix> out;
    out.reserve(spec.count);
    for (int i = 0; i < spec.count; ++i) out.push_back(draw_matrix(spec.kind, spec.dim, g));
    return out;
}

ParamGrid default_param_grid() {
    ParamGrid g;
    g.alphas = {Complex(2, 0), Complex(3, 0), Complex(1, 1), Complex(0.5, 0)};
    g.betas = {0, 0.5, 1, 5};
    g.mus = {0, 0.25, 0.5, 1};
    g.lambdas = {0, 0.25, 0.5, 1};
    g.rs = {1, 1.5, 2};
    g.ss = {1, 1.5, 2};
    g.ns = {2, 3};
    g.pqs = {{2, 2}, {3, 1.5}};
    return g;
}

ParamGrid quick_param_grid() {
    ParamGrid g;
    g.alphas = {Complex(2, 0)};
    g.betas = {0, 1};
    g.mus = {0.5};
    g.lambdas = {0.5};
    g.rs = {1, 2};
    g.ss = {1};
    g.ns = {2};
    g.pqs = {{2, 2}};
    return g;
}

std::vector<BoundParams> grid_points_for(const BoundDescriptor& d, const ParamGrid& grid) {
    std::vector<BoundParams> pts{BoundParams{}};
    auto cross = [&pts](auto&& apply, std::size_t count) {
        std::vector<BoundParams> next;
        next.reserve(pts.size() * count);
        for (const auto& base : pts)
            for (std::size_t i = 0; i < count; ++i) {
                BoundParams p = base;
                apply(p, i);
                next.push_back(std::move(p));
            }
        pts = std::move(next);
    };
    const auto& dom = d.param_domain;
    if (dom.alpha) cross([&](BoundParams& p, std::size_t i) { p.alpha = grid.alphas[i]; }, grid.alphas.size());
    if (dom.beta) cross([&](BoundParams& p, std::size_t i) { p.beta = grid.betas[i]; }, grid.betas.size());
    if (dom.mu) cross([&](BoundParams& p, std::size_t i) { p.mu = grid.mus[i]; }, grid.mus.size());
    if (dom.lambda)
        cross([&](BoundParams& p, std::size_t i) { p.lambda_exp = grid.lambdas[i]; }, grid.lambdas.size());
    if (dom.r) cross([&](BoundParams& p, std::size_t i) { p.r = grid.rs[i]; }, grid.rs.size());
    if (dom.s) cross([&](BoundParams& p, std::size_t i) { p.s = grid.ss[i]; }, grid.ss.size());
    if (dom.n) cross([&](BoundParams& p, std::size_t i) { p.n = grid.ns[i]; }, grid.ns.size());
    if (dom.pq)
        cross([&](BoundParams& p, std::size_t i) { p.p = grid.pqs[i].first; p.q = grid.pqs[i].second; },
              grid.pqs.size());

    std::vector<BoundParams> valid;
    for (const auto& p : pts) {
        try {
            validate_params(d, p);
            valid.push_back(p);
        } catch (const Error&) {
            // grid point outside this bound's domain (e.g. q*r < 2)
        }
    }
    if (valid.empty()) throw ParamOutOfDomainError(d.id + ": no valid grid points");
    return valid;
}

VerificationReport run_trials(const std::vector<std::string>& bound_ids, const EnsembleSpec& spec,
                              const ParamGrid& grid, int count, int grid_offset) {
    if (spec.dim < 1 || spec.dim > 16) throw BadDimError("run_trials: dim must lie in 1..16");
    VerificationReport report;
    report.spec = spec;
    report.spec.count = count;
    report.grid = grid;

    for (const auto& id : bound_ids) {
        const BoundDescriptor& d = find_bound(id);
        const auto pts = grid_points_for(d, grid);
        for (int t = 0; t < count; ++t) {
            const BoundParams& p = pts[(static_cast<std::size_t>(grid_offset) + t) % pts.size()];
            TrialRecord rec;
            rec.bound_id = id;
            rec.trial = t;
            rec.dim = spec.dim;
            rec.params = p;
            GaussianStream g(trial_seed(spec.seed, id, t));
            try {
                const int n = p.n.value_or(2);
                BoundInput in = draw_input(d, spec.kind, spec.dim, n, g);
                CheckResult cr = check_bound(id, in, p);
                rec.omega_power = cr.omega_power;
                rec.bound = cr.bound;
                rec.slack = cr.slack;
                rec.holds = cr.holds;
            } catch (const Error& e) {
                rec.error = true;
                rec.error_msg = e.what();
            }
            report.records.push_back(std::move(rec));
        }
    }

    ReportSummary s;
    double slack_sum = 0.0;
    s.min_slack = std::numeric_limits<double>::infinity();
    int counted = 0;
    for (const auto& rec : report.records) {
        if (rec.error) {
            ++s.errors;
            continue;
        }
        if (!rec.holds) ++s.violations;
        slack_sum += rec.slack;
        s.min_slack = std::min(s.min_slack, rec.slack);
        ++counted;
    }
    s.mean_slack = counted ? slack_sum / counted : 0.0;
    if (!counted) s.min_slack = 0.0;
    report.summary = s;
    return report;
}

std::vector<TightnessRow> tightness_stats(const VerificationReport& report) {
    if (report.records.empty()) throw EmptyReportError("tightness_stats: empty report");
    std::map<std::string, std::vector<double>> ratios;
    std::map<std::string, double> min_slack;
    for (const auto& rec : report.records) {
        if (rec.error) continue;
        const BoundDescriptor& d = find_bound(rec.bound_id);
        double ratio = 0.0;
        if (d.side == BoundSide::UpperOnOmegaPower)
            ratio = rec.bound > 0 ? rec.omega_power / rec.bound : 1.0;
        else
            ratio = rec.omega_power > 0 ? rec.bound / rec.omega_power : 1.0;
        ratios[rec.bound_id].push_back(ratio);
        auto it = min_slack.find(rec.bound_id);
        if (it == min_slack.end())
            min_slack[rec.bound_id] = rec.slack;
        else
            it->second = std::min(it->second, rec.slack);
    }
    auto quantile = [](std::vector<double>& v, double q) {
        if (v.empty()) return 0.0;
        const double pos = q * (v.size() - 1);
        const std::size_t lo = static_cast<std::size_t>(pos);
        const std::size_t hi = std::min(lo + 1, v.size() - 1);
        return v[lo] + (pos - lo) * (v[hi] - v[lo]);
    };
    std::vector<TightnessRow> rows;
    for (auto& [id, v] : ratios) {
        std::sort(v.begin(), v.end());
        TightnessRow row;
        row.bound_id = id;
        row.count = static_cast<int>(v.size());
        row.q25 = quantile(v, 0.25);
        row.median = quantile(v, 0.5);
        row.q75 = quantile(v, 0.75);
        row.max = v.back();
        row.min_slack = min_slack[id];
        rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end(), [](const TightnessRow& a, const TightnessRow& b) {
        if (a.median != b.median) return a.median > b.median;
        return a.bound_id < b.bound_id;
    });
    return rows;
}

std::string render_report(const VerificationReport& report, ReportFormat format) {
    std::ostringstream os;
    if (format == ReportFormat::Csv) {
        os << "bound_id,trial,dim,omega_power,bound,slack,holds\n";
        for (const auto& r : report.records) {
            os << r.bound_id << ',' << r.trial << ',' << r.dim << ',' << format_g17(r.omega_power)
               << ',' << format_g17(r.bound) << ',' << format_g17(r.slack) << ','
               << (r.holds ? 1 : 0) << '\n';
        }
        return os.str();
    }
    os << "{\"spec\":{\"kind\":\"" << ensemble_kind_name(report.spec.kind)
       << "\",\"dim\":" << report.spec.dim << ",\"count\":" << report.spec.count
       << ",\"seed\":" << report.spec.seed << "},";
    os << "\"grid\":{";
    os << "\"alpha\":[";
    for (std::size_t i = 0; i < report.grid.alphas.size(); ++i)
        os << (i ? "," : "") << '[' << json_num(report.grid.alphas[i].real()) << ','
           << json_num(report.grid.alphas[i].imag()) << ']';
    auto axis = [&os](const char* name, const std::vector<double>& v) {
        os << ",\"" << name << "\":[";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << json_num(v[i]);
        os << ']';
    };
    os << ']';
    axis("beta", report.grid.betas);
    axis("mu", report.grid.mus);
    axis("lambda", report.grid.lambdas);
    axis("r", report.grid.rs);
    axis("s", report.grid.ss);
    os << ",\"n\":[";
    for (std::size_t i = 0; i < report.grid.ns.size(); ++i)
        os << (i ? "," : "") << report.grid.ns[i];
    os << "],\"pq\":[";
    for (std::size_t i = 0; i < report.grid.pqs.size(); ++i)
        os << (i ? "," : "") << '[' << json_num(report.grid.pqs[i].first) << ','
           << json_num(report.grid.pqs[i].second) << ']';
    os << "]},";
    os << "\"records\":[";
    for (std::size_t i = 0; i < report.records.size(); ++i) {
        const auto& r = report.records[i];
        os << (i ? "," : "") << "{\"bound_id\":\"" << r.bound_id << "\",\"trial\":" << r.trial
           << ",\"dim\":" << r.dim << ",\"params\":";
        write_params_json(os, r.params);
        os << ",\"omega_power\":" << json_num(r.omega_power) << ",\"bound\":" << json_num(r.bound)
           << ",\"slack\":" << json_num(r.slack) << ",\"holds\":" << (r.holds ? "true" : "false");
        if (r.error) os << ",\"error\":\"" << escape(r.error_msg) << '"';
        os << '}';
    }
    os << "],";
    os << "\"summary\":{\"violations\":" << report.summary.violations
       << ",\"errors\":" << report.summary.errors
       << ",\"min_slack\":" << json_num(report.summary.min_slack)
       << ",\"mean_slack\":" << json_num(report.summary.mean_slack) << "}}";
    return os.str();
}

void emit_report(const VerificationReport& report, ReportFormat format, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("emit_report: cannot open " + path);
    out << render_report(report, format);
    if (!out) throw IoError("emit_report: write failed for " + path);
}

VerificationReport parse_report_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("report JSON: ") + e.what());
    }
    VerificationReport rep;
    rep.spec.kind = ensemble_kind_from_name(j.at("spec").at("kind").get<std::string>());
    rep.spec.dim = j.at("spec").at("dim").get<int>();
    rep.spec.count = j.at("spec").at("count").get<int>();
    rep.spec.seed = j.at("spec").at("seed").get<std::uint64_t>();
    const auto& g = j.at("grid");
    for (const auto& a : g.at("alpha"))
        rep.grid.alphas.emplace_back(a[0].get<double>(), a[1].get<double>());
    for (const auto& x : g.at("beta")) rep.grid.betas.push_back(x.get<double>());
    for (const auto& x : g.at("mu")) rep.grid.mus.push_back(x.get<double>());
    for (const auto& x : g.at("lambda")) rep.grid.lambdas.push_back(x.get<double>());
    for (const auto& x : g.at("r")) rep.grid.rs.push_back(x.get<double>());
    for (const auto& x : g.at("s")) rep.grid.ss.push_back(x.get<double>());
    for (const auto& x : g.at("n")) rep.grid.ns.push_back(x.get<int>());
    for (const auto& x : g.at("pq"))
        rep.grid.pqs.emplace_back(x[0].get<double>(), x[1].get<double>());
    for (const auto& r : j.at("records")) {
        TrialRecord rec;
        rec.bound_id = r.at("bound_id").get<std::string>();
        rec.trial = r.at("trial").get<int>();
        rec.dim = r.at("dim").get<int>();
        rec.params = params_from_json(r.at("params"));
        rec.omega_power = r.at("omega_power").get<double>();
        rec.bound = r.at("bound").get<double>();
        rec.slack = r.at("slack").get<double>();
        rec.holds = r.at("holds").get<bool>();
        if (r.contains("error")) {
            rec.error = true;
            rec.error_msg = r.at("error").get<std::string>();
        }
        rep.records.push_back(std::move(rec));
    }
    rep.summary.violations = j.at("summary").at("violations").get<int>();
    rep.summary.errors = j.at("summary").at("errors").get<int>();
    rep.summary.min_slack = j.at("summary").at("min_slack").get<double>();
    rep.summary.mean_slack = j.at("summary").at("mean_slack").get<double>();
    return rep;
}

}  // namespace nradius
