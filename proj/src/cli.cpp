#include "qosc/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qosc/energy.hpp"
#include "qosc/errors.hpp"
#include "qosc/fock.hpp"
#include "qosc/params.hpp"
#include "qosc/qhermite.hpp"
#include "qosc/representations.hpp"
#include "qosc/structure.hpp"

namespace qosc::cli {

std::string format17(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::pair<std::string, std::string>> verdicts;
    std::vector<std::string> warnings;
    std::vector<Table> tables;

    void param(const std::string& k, double v) { params.emplace_back(k, format17(v)); }
    void param(const std::string& k, const std::string& v) { params.emplace_back(k, v); }
    void verdict(const std::string& k, double v) { verdicts.emplace_back(k, format17(v)); }
    void verdict(const std::string& k, const std::string& v) { verdicts.emplace_back(k, v); }
};

void emit_json(const OutputRecord& rec, std::ostream& os) {
    nlohmann::ordered_json doc;
    doc["command"] = rec.command;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& kv : rec.params) p[kv.first] = kv.second;
    doc["params"] = p;
    nlohmann::ordered_json v = nlohmann::ordered_json::object();
    for (const auto& kv : rec.verdicts) v[kv.first] = kv.second;
    doc["verdicts"] = v;
    doc["warnings"] = rec.warnings;
    nlohmann::ordered_json tabs = nlohmann::ordered_json::object();
    for (const Table& t : rec.tables) {
        nlohmann::ordered_json jt;
        jt["columns"] = t.columns;
        jt["rows"] = t.rows;
        tabs[t.name] = jt;
    }
    doc["tables"] = tabs;
    os << doc.dump(2) << "\n";
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

void emit_csv_table(const Table& t, std::ostream& os) {
    for (size_t c = 0; c < t.columns.size(); ++c)
        os << (c ? "," : "") << csv_escape(t.columns[c]);
    os << "\n";
    for (const auto& row : t.rows) {
        for (size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_escape(row[c]);
        os << "\n";
    }
}

void emit_csv(const OutputRecord& rec, std::ostream& os) {
    os << "# command " << rec.command << "\n";
    for (const auto& kv : rec.params) os << "# param " << kv.first << "=" << kv.second << "\n";
    for (const auto& kv : rec.verdicts) os << "# verdict " << kv.first << "=" << kv.second << "\n";
    for (const auto& w : rec.warnings) os << "# warning " << w << "\n";
    for (const Table& t : rec.tables) {
        os << "# table " << t.name << "\n";
        emit_csv_table(t, os);
    }
}

void sink(const OutputRecord& rec, const std::string& format, const std::string& out_path,
          std::ostream& os) {
    if (out_path.empty()) {
        if (format == "csv")
            emit_csv(rec, os);
        else
            emit_json(rec, os);
        return;
    }
    if (format == "csv") {
        {
            std::ofstream meta(out_path + ".meta.csv");
            Table m{"meta", {"key", "value"}, {}};
            m.rows.push_back({"command", rec.command});
            for (const auto& kv : rec.params) m.rows.push_back({"param " + kv.first, kv.second});
            for (const auto& kv : rec.verdicts) m.rows.push_back({"verdict " + kv.first, kv.second});
            for (const auto& w : rec.warnings) m.rows.push_back({"warning", w});
            emit_csv_table(m, meta);
        }
        for (const Table& t : rec.tables) {
            std::ofstream f(out_path + "." + t.name + ".csv");
            emit_csv_table(t, f);
        }
    } else {
        std::ofstream f(out_path);
        emit_json(rec, f);
    }
}

struct LevelCells {
    std::string value, log10, sign;
};

LevelCells level_cells(const LogReal& v) {
    LevelCells c;
    c.value = v.representable() ? format17(v.value()) : "";
    c.log10 = format17(v.sign == 0 ? -std::numeric_limits<double>::infinity() : v.log10_mag());
    c.sign = format17(static_cast<double>(v.sign));
    return c;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"deformed-oscillator toolkit: structure functions, Fock representations, "
                 "q-Hermite spectra, energy asymptotics"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string out_path;
    app.add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out_path);

    double q = 0, alpha = 0, beta = 0, gamma = 0, nu = 0;
    double f0 = 0, kappa0 = 0, Bpar = 0, lambda0 = 0;
    double fa = 0, fb = 0, fc = 0;
    double scale = 1.0;
    int n_max = 32, dim = 16, window = 256, kmax = -1;
    std::string case_name;

    OutputRecord rec;
    std::function<void()> action;

    auto add_unified = [&](CLI::App* sub, bool with_beta = true) {
        sub->add_option("--q", q)->required();
        sub->add_option("--alpha", alpha)->required();
        if (with_beta) sub->add_option("--beta", beta)->required();
        sub->add_option("--gamma", gamma)->required();
        sub->add_option("--nu", nu)->required();
    };

    // structure
    {
        CLI::App* sub = app.add_subcommand("structure", "structure function table");
        add_unified(sub);
        sub->add_option("--f0", f0);
        sub->add_option("--n-max", n_max)->required()->check(CLI::NonNegativeNumber);
        sub->callback([&] {
            action = [&] {
                DeformationParams p(q, alpha, beta, gamma, nu);
                StructureFunction sf(p, f0);
                rec.command = "structure";
                rec.param("q", q); rec.param("alpha", alpha); rec.param("beta", beta);
                rec.param("gamma", gamma); rec.param("nu", nu); rec.param("f0", f0);
                if (sf.condition_warning())
                    rec.warnings.push_back("q^alpha and q^gamma nearly coincide; the alpha != gamma "
                                           "closed-form branch is ill-conditioned");
                Table t{"structure", {"n", "f_closed", "f_recurrence", "residual"}, {}};
                for (int n = 0; n <= n_max; ++n) {
                    double fc_ = sf.closed(n), fr = sf.recurrence(n);
                    t.rows.push_back({format17(n), format17(fc_), format17(fr), format17(std::fabs(fc_ - fr))});
                }
                rec.tables.push_back(std::move(t));
            };
        });
    }

    // positivity
    {
        CLI::App* sub = app.add_subcommand("positivity", "positivity regime verdict");
        add_unified(sub, false);
        sub->callback([&] {
            action = [&] {
                DeformationParams p(q, alpha, 0.0, gamma, nu);
                auto v = validate_positivity(p);
                rec.command = "positivity";
                rec.param("q", q); rec.param("alpha", alpha); rec.param("gamma", gamma); rec.param("nu", nu);
                rec.verdict("positive", v.positive ? "true" : "false");
                rec.verdict("regime", regime_name(v.regime));
                rec.verdict("two_nu_low", v.two_nu_low);
                rec.verdict("two_nu_high", v.two_nu_high);
            };
        });
    }

    // verify
    {
        CLI::App* sub = app.add_subcommand("verify", "relation/Casimir residual report");
        add_unified(sub);
        sub->add_option("--dim", dim)->required()->check(CLI::Range(8, 4096));
        sub->callback([&] {
            action = [&] {
                DeformationParams p(q, alpha, beta, gamma, nu);
                rec.command = "verify";
                rec.param("q", q); rec.param("alpha", alpha); rec.param("beta", beta);
                rec.param("gamma", gamma); rec.param("nu", nu); rec.param("dim", dim);
                FockRep rep = fock_rep(p, dim);
                Table t{"relations", {"relation", "inner", "full", "scale", "applicable"}, {}};
                for (const auto& r : verify_relations(rep, p))
                    t.rows.push_back({r.relation, format17(r.inner), format17(r.full),
                                      format17(r.scale), r.applicable ? "true" : "false"});
                for (int n = 1; n <= 4; ++n) {
                    auto r = verify_useful_formula(rep, p, n);
                    t.rows.push_back({r.relation, format17(r.inner), format17(r.full),
                                      format17(r.scale), "true"});
                }
                rec.tables.push_back(std::move(t));
                auto cas = casimir_c3(rep, p);
                rec.verdict("casimir_commutator_inner", cas.commutator.inner);
                rec.verdict("casimir_diag_spread", cas.diag_spread);
                rec.verdict("casimir_diag_max_abs", cas.diag_max_abs);
            };
        });
    }

    // classify
    {
        CLI::App* sub = app.add_subcommand("classify", "representation classification");
        add_unified(sub);
        sub->add_option("--kappa0", kappa0)->required();
        sub->add_option("--B", Bpar)->required();
        sub->add_option("--lambda0", lambda0)->required();
        sub->add_option("--window", window)->check(CLI::Range(16, 1 << 20));
        sub->callback([&] {
            action = [&] {
                DeformationParams p(q, alpha, beta, gamma, nu);
                RepSpec spec(p, kappa0, Bpar, lambda0);
                rec.command = "classify";
                rec.param("q", q); rec.param("alpha", alpha); rec.param("beta", beta);
                rec.param("gamma", gamma); rec.param("nu", nu);
                rec.param("kappa0", kappa0); rec.param("B", Bpar); rec.param("lambda0", lambda0);
                rec.param("window", window);
                auto cls = classify(spec, window);
                rec.verdict("class", rep_class_name(cls.cls));
                if (cls.cls == RepClass::FiniteDim) rec.verdict("dim", cls.dim);
                if (cls.n1) rec.verdict("n1", static_cast<double>(*cls.n1));
                if (cls.n2) rec.verdict("n2", static_cast<double>(*cls.n2));
                rec.verdict("witness", cls.witness);
                Table t{"lambda", {"n", "lambda_n"}, {}};
                long span = std::min(window, 32);
                for (long n = -span; n <= span; ++n)
                    t.rows.push_back({format17(static_cast<double>(n)), format17(lambda_seq(spec, n))});
                rec.tables.push_back(std::move(t));
            };
        });
    }

    // qspectrum
    {
        CLI::App* sub = app.add_subcommand("qspectrum", "position-operator spectrum");
        sub->add_option("--q", q)->required();
        sub->add_option("--a", fa)->required();
        sub->add_option("--b", fb)->required();
        sub->add_option("--c", fc)->required();
        sub->add_option("--kmax", kmax);
        dim = 200;
        sub->add_option("--dim", dim)->check(CLI::Range(2, 4096));
        sub->callback([&] {
            action = [&] {
                HermiteFamilyParams fp(q, fa, fb, fc);
                rec.command = "qspectrum";
                rec.param("q", q); rec.param("a", fa); rec.param("b", fb); rec.param("c", fc);
                rec.param("dim", dim);
                auto sa = selfadjointness_case(q, fa, fc);
                rec.verdict("selfadjointness", selfadjointness_name(sa.verdict));
                rec.verdict("deciding_exponent", sa.deciding_exponent);
                rec.verdict("partial_sum_100", sa.partial_sum_100);
                rec.verdict("partial_sum_10000", sa.partial_sum_10000);
                if (fp.restricted() && fp.qprime() < 1.0) {
                    QSpectrum sp = q_spectrum(fp, kmax);
                    rec.verdict("truncation_k", sp.truncation_k);
                    rec.verdict("raw_weight_sum", sp.raw_weight_sum);
                    rec.verdict("tail_bound", sp.tail_bound);
                    Table t{"masses", {"k", "x", "weight"}, {}};
                    for (size_t k = 0; k < sp.points.size(); ++k)
                        t.rows.push_back({format17(static_cast<double>(k)), format17(sp.points[k]),
                                          format17(sp.weights[k])});
                    rec.tables.push_back(std::move(t));
                } else {
                    rec.warnings.push_back("analytic spectrum needs a = (c-1)/2 and q' in (0,1); "
                                           "emitting finite-section eigenvalues only");
                }
                auto eigs = jacobi_eigs(JacobiOperator::from_family(fp, dim));
                Table e{"eigenvalues", {"i", "eig"}, {}};
                for (size_t i = 0; i < eigs.size(); ++i)
                    e.rows.push_back({format17(static_cast<double>(i)), format17(eigs[i])});
                rec.tables.push_back(std::move(e));
            };
        });
    }

    // energy
    {
        CLI::App* sub = app.add_subcommand("energy", "energy spectrum and asymptotics");
        add_unified(sub);
        sub->add_option("--n-max", n_max)->check(CLI::NonNegativeNumber);
        sub->add_option("--scale", scale);
        sub->callback([&] {
            action = [&] {
                DeformationParams p(q, alpha, beta, gamma, nu);
                EnergySpec es(p, scale);
                if (!validate_positivity(p).positive)
                    throw InvalidParams("energy spectrum needs a positive structure function");
                rec.command = "energy";
                rec.param("q", q); rec.param("alpha", alpha); rec.param("beta", beta);
                rec.param("gamma", gamma); rec.param("nu", nu); rec.param("scale", scale);
                Table t{"levels", {"n", "E", "E_closed", "residual", "E_log10_mag", "E_sign"}, {}};
                for (int n = 0; n <= n_max; ++n) {
                    LogReal lv = energy_log(es, n);
                    auto c = level_cells(lv);
                    std::string closed, resid;
                    if (lv.representable()) {
                        double ed = energy_direct(es, n), ec = energy_closed(es, n);
                        closed = format17(ec);
                        resid = format17(std::fabs(ed - ec));
                    }
                    t.rows.push_back({format17(n), c.value, closed, resid, c.log10, c.sign});
                }
                rec.tables.push_back(std::move(t));
                Table s{"spacing", {"n", "direct", "closed", "display"}, {}};
                for (long n = 0; 2 * n + 1 <= n_max; ++n) {
                    auto sp = spacing(es, n);
                    s.rows.push_back({format17(static_cast<double>(n)), format17(sp.direct),
                                      format17(sp.closed), format17(sp.display)});
                }
                rec.tables.push_back(std::move(s));
                try {
                    auto av = asymptotic_class(es);
                    rec.verdict("asymptotic", asymptotic_case_name(av.cls));
                    rec.verdict("driver", av.driver);
                    if (av.e_max) rec.verdict("e_max", *av.e_max);
                    if (av.argmax >= 0) rec.verdict("argmax", static_cast<double>(av.argmax));
                    rec.verdict("corroborated", av.corroborated ? "true" : "false");
                    rec.verdict("probe", av.probe_note);
                    if (!av.corroborated)
                        throw InconsistentClassification("asymptotic verdict not corroborated: " +
                                                         av.probe_note);
                } catch (const DegenerateSaturation& e) {
                    rec.verdict("asymptotic", std::string("degenerate-saturation: ") + e.what());
                }
            };
        });
    }

    // reduce
    {
        CLI::App* sub = app.add_subcommand("reduce", "special-case reduction check");
        sub->add_option("--case", case_name)->required()
            ->check(CLI::IsMember({"arik-coon", "biedenharn-macfarlane", "chung", "borzov",
                                   "nu-modified", "q-nu", "hermite"}));
        sub->add_option("--q", q);
        sub->add_option("--alpha", alpha);
        sub->add_option("--beta", beta);
        sub->add_option("--gamma", gamma);
        sub->add_option("--nu", nu);
        sub->add_option("--a", fa);
        sub->add_option("--b", fb);
        sub->add_option("--c", fc);
        sub->callback([&] {
            action = [&] {
                SpecialCase sc;
                if (case_name == "arik-coon") sc = SpecialCase::arik_coon(q);
                else if (case_name == "biedenharn-macfarlane") sc = SpecialCase::biedenharn_macfarlane(q);
                else if (case_name == "chung") sc = SpecialCase::chung_et_al(q, alpha, beta);
                else if (case_name == "borzov") sc = SpecialCase::borzov(q, alpha, beta, gamma);
                else if (case_name == "nu-modified") sc = SpecialCase::nu_modified(nu);
                else if (case_name == "q-nu") sc = SpecialCase::q_nu(q, nu);
                else sc = SpecialCase::hermite_family(q, fa, fb, fc);
                DeformationParams p = special_case_params(sc);
                StructureFunction sf(p);
                rec.command = "reduce";
                rec.param("case", case_name);
                rec.verdict("mapped_q", p.q);
                rec.verdict("mapped_alpha", p.alpha);
                rec.verdict("mapped_beta", p.beta);
                rec.verdict("mapped_gamma", p.gamma);
                rec.verdict("mapped_nu", p.nu);
                Table t{"reduction", {"n", "f_unified", "f_catalog", "residual"}, {}};
                double worst = 0.0;
                for (long n = 0; n <= 100; ++n) {
                    double fu = sf.closed(n), fc_ = catalog_f(sc, n);
                    double resid = std::fabs(fu - fc_) / std::max(1.0, std::fabs(fc_));
                    worst = std::max(worst, resid);
                    t.rows.push_back({format17(static_cast<double>(n)), format17(fu), format17(fc_),
                                      format17(resid)});
                }
                rec.tables.push_back(std::move(t));
                rec.verdict("max_relative_deviation", worst);
            };
        });
    }

    std::vector<const char*> argv;
    argv.push_back("qosc");
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        action();
    } catch (const InconsistentClassification& e) {
        sink(rec, format, out_path, out);
        err << "inconsistent: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    sink(rec, format, out_path, out);
    return 0;
}

} // namespace qosc::cli
