#pragma once

// Command-line front end for the same-type checks.
//
// Exit codes: 0 success (for `reproduce`: the non-equivalence verdict was
// reproduced), 1 verdict mismatch, 2 usage error, 3 domain error.

#include "report.hpp"

#include <sametype/sametype.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace sametype::cli {

enum ExitCode : int { ok = 0, mismatch = 1, usage = 2, domain = 3 };

namespace detail {

inline std::string show(const Value& v) { return v.exact ? format_short(*v.exact) : format_real(v.approx); }

inline std::string yes_no(bool b) { return b ? "holds" : "fails"; }

inline std::string opt_rational(const std::optional<Rational>& r) { return r ? format_short(*r) : "none"; }

inline std::string opt_bool(const std::optional<bool>& b) {
    if (!b) return "n/a";
    return yes_no(*b);
}

inline std::string opt_estimate(const std::optional<ScaleEstimate>& e) {
    if (!e) return "none";
    if (e->exact) return format_short(*e->exact);
    return format_real(e->value) + " (approx)";
}

/// "loc:weight,loc:weight"
inline MixingDistribution parse_mixture(const std::string& spec) {
    std::vector<Atom> atoms;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw parse_error("mixture atom '" + item + "' must be location:weight");
        atoms.push_back({parse_rational(item.substr(0, colon)), parse_rational(item.substr(colon + 1))});
    }
    return MixingDistribution::make(std::move(atoms));
}

inline std::vector<Rational> parse_list(const std::string& spec) {
    std::vector<Rational> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    return out;
}

struct DistOption {
    std::string q;
    std::string mix;

    bool given() const { return !q.empty() || !mix.empty(); }

    DiscreteDist build(const std::string& what) const {
        if (!q.empty() && !mix.empty()) throw CLI::ValidationError(what, "give a geometric parameter or a mixture, not both");
        if (!q.empty()) return geometric(parse_rational(q));
        if (!mix.empty()) return mixture_dist(parse_mixture(mix));
        throw CLI::RequiredError(what);
    }
};

class Table {
public:
    void row(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }

    std::string render() const {
        std::size_t width = 0;
        for (const auto& [k, v] : rows_) width = std::max(width, k.size());
        std::ostringstream os;
        for (const auto& [k, v] : rows_) os << "  " << std::left << std::setw(static_cast<int>(width)) << k << "  " << v << "\n";
        return os.str();
    }

    std::string csv() const {
        std::ostringstream os;
        os << "field,value\n";
        for (const auto& [k, v] : rows_) os << k << "," << v << "\n";
        return os.str();
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
};

struct Output {
    std::string format = "table";
    std::string out_file;
};

}  // namespace detail

class App {
public:
    App() : app_("Exact checks of 'same type' for distributions on {0,1,2,...}", "same-type") {
        app_.require_subcommand(1);
        app_.set_help_all_flag("--help-all");

        auto add_output = [](CLI::App* sub, detail::Output& o) {
            sub->add_option("--format", o.format, "Output format")
                ->check(CLI::IsMember({"table", "json", "csv"}))
                ->capture_default_str();
            sub->add_option("--out", o.out_file, "Write output to FILE instead of stdout");
        };

        auto* reproduce = app_.add_subcommand("reproduce", "Rebuild the geometric counterexample (q=1/4, alpha=1/2)");
        reproduce->add_option("--q", repro_q_, "Geometric parameter of X")->capture_default_str();
        reproduce->add_option("--alpha", repro_alpha_, "Common scale for both relations")->capture_default_str();
        reproduce->add_flag("--allow-float", allow_float_, "Accept an irrational q^alpha via a rational stand-in");
        reproduce->add_option("--horizon", horizon_, "Survival horizon for the d.f. check")->capture_default_str();
        add_output(reproduce, output_);
        reproduce->callback([this] { code_ = cmd_reproduce(); });

        auto* check = app_.add_subcommand("check", "Check whether two distributions are of the same type");
        check->add_option("--q1", first_.q, "First distribution: geometric parameter");
        check->add_option("--mix1", first_.mix, "First distribution: mixture loc:weight,...");
        check->add_option("--q2", second_.q, "Second distribution: geometric parameter");
        check->add_option("--mix2", second_.mix, "Second distribution: mixture loc:weight,...");
        check->add_option("--alpha", alpha_, "Scale (required in fixed mode)");
        check->add_option("--mode", mode_, "fixed: test the given alpha; exists: search for one")
            ->check(CLI::IsMember({"fixed", "exists"}));
        check->add_option("--horizon", horizon_, "Survival horizon for the d.f. check")->capture_default_str();
        add_output(check, output_);
        check->callback([this] { code_ = cmd_check(); });

        auto* thin_cmd = app_.add_subcommand("thin", "Apply the thinning substitution s -> 1-alpha+alpha s");
        add_dist_options(thin_cmd, single_);
        thin_cmd->add_option("--alpha", alpha_, "Thinning parameter in (0,1]")->required();
        add_output(thin_cmd, output_);
        thin_cmd->callback([this] { code_ = cmd_thin(); });

        auto* scale = app_.add_subcommand("scale", "Scale the d.f.: survival m(k) -> m(alpha k)");
        add_dist_options(scale, single_);
        scale->add_option("--alpha", alpha_, "Scale alpha > 0")->required();
        scale->add_option("--horizon", horizon_, "Last k shown")->capture_default_str();
        add_output(scale, output_);
        scale->callback([this] { code_ = cmd_scale(); });

        auto* pmf = app_.add_subcommand("pmf", "Tabulate pmf, d.f. and survival");
        add_dist_options(pmf, single_);
        pmf->add_option("--n", count_, "Number of terms")->capture_default_str();
        add_output(pmf, output_);
        pmf->callback([this] { code_ = cmd_pmf(); });

        auto* validate = app_.add_subcommand("validate-moments", "Check complete monotonicity of m(0..K)");
        add_dist_options(validate, single_);
        validate->add_option("--values", values_, "Explicit prefix m(0),m(1),...");
        validate->add_option("--alpha", alpha_, "Check m(alpha k) instead of m(k)");
        validate->add_option("--prefix", prefix_, "K: check m(0..K)")->capture_default_str();
        validate->add_option("--order", order_, "Highest difference order J")->capture_default_str();
        add_output(validate, output_);
        validate->callback([this] { code_ = cmd_validate(); });
    }

    int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
        out_ = &out;
        try {
            app_.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            const int code = app_.exit(e, out, err);
            return code == 0 ? ok : usage;
        } catch (const parse_error& e) {
            err << "error: " << e.what() << "\n";
            return usage;
        } catch (const std::domain_error& e) {
            err << "domain error: " << e.what() << "\n";
            return domain;
        } catch (const std::logic_error& e) {
            err << "domain error: " << e.what() << "\n";
            return domain;
        } catch (const io_error& e) {
            err << "error: " << e.what() << "\n";
            return usage;
        }
        for (const auto& line : diagnostics_) err << line << "\n";
        return code_;
    }

private:
    struct io_error : std::runtime_error {
        using std::runtime_error::runtime_error;
    };

    static void add_dist_options(CLI::App* sub, detail::DistOption& d) {
        sub->add_option("--q", d.q, "Geometric parameter q in (0,1)");
        sub->add_option("--mix", d.mix, "Finite mixture loc:weight,...");
    }

    void emit(const std::string& text) {
        if (output_.out_file.empty()) {
            *out_ << text;
            return;
        }
        std::ofstream f(output_.out_file, std::ios::binary);
        if (!f) throw io_error("cannot open '" + output_.out_file + "' for writing");
        f << text;
    }

    void emit_document(const report::ReportDocument& doc) { emit(report::to_json(doc).dump(2) + "\n"); }

    int cmd_reproduce() {
        const Rational q = parse_rational(repro_q_);
        const Rational alpha = parse_rational(repro_alpha_);
        const auto r = counterexample_report(q, alpha, allow_float_, horizon_);
        const bool reproduced = r.def22_holds && !r.def21_xy && !r.def21_yx;

        if (output_.format == "json") {
            report::ReportDocument doc;
            doc.command = "reproduce";
            doc.inputs = {{"q", format_rational(q)}, {"alpha", format_rational(alpha)},
                          {"horizon", std::to_string(horizon_)}};
            doc.results = report::to_json(r);
            emit_document(doc);
        } else {
            detail::Table t;
            t.row("q", format_short(r.q));
            t.row("alpha", format_short(r.alpha.value()));
            t.row("q^alpha", format_short(r.q_y) + (r.exact ? "" : " (rational stand-in)"));
            t.row("Q_X(s)", to_string(r.qx_pgf));
            t.row("Q_Y(s)", to_string(r.qy_pgf));
            t.row("Q_X(1-alpha+alpha s)", to_string(r.thinned_x));
            t.row("Q_Y(1-alpha+alpha s)", to_string(r.thinned_y));
            t.row("G(k) = F_alpha(k)", detail::yes_no(r.def22_holds));
            t.row("Q_X(s) = Q_Y(1-alpha+alpha s)", detail::yes_no(r.def21_xy));
            t.row("Q_Y(s) = Q_X(1-alpha+alpha s)", detail::yes_no(r.def21_yx));
            t.row("thinning witness X vs Y", detail::opt_rational(r.def21_witness_alpha_xy));
            t.row("thinning witness Y vs X", detail::opt_rational(r.def21_witness_alpha_yx));
            t.row("verdict", report::verdict(r));
            if (output_.format == "csv") {
                emit(t.csv());
            } else {
                emit("X ~ geometric(q), Y with G(k) = 1 - q^(alpha k), d.f. convention F(k) = P(X < k)\n" +
                     t.render());
            }
        }
        if (!reproduced) {
            diagnostics_.push_back("mismatch: expected the d.f. relation to hold and both thinning relations to fail "
                                   "at the same alpha; definitions_agree = " +
                                   std::string(r.definitions_agree ? "true" : "false"));
            return mismatch;
        }
        return ok;
    }

    int cmd_check() {
        const DiscreteDist f = first_.build("--q1/--mix1");
        const DiscreteDist g = second_.build("--q2/--mix2");
        std::string mode = mode_.empty() ? (alpha_.empty() ? "exists" : "fixed") : mode_;
        if (mode == "fixed" && alpha_.empty()) throw CLI::RequiredError("--alpha (fixed mode)");

        PairCheck c;
        if (mode == "fixed")
            c = check_fixed(f, g, ScaleParam(parse_rational(alpha_)), horizon_);
        else
            c = check_exists(f, g, horizon_);

        if (output_.format == "json") {
            report::ReportDocument doc;
            doc.command = "check";
            doc.inputs = {{"first", f.describe()}, {"second", g.describe()}, {"mode", mode},
                          {"horizon", std::to_string(horizon_)}};
            if (!alpha_.empty()) doc.inputs["alpha"] = format_rational(parse_rational(alpha_));
            doc.results = report::to_json(c, mode);
            emit_document(doc);
            return ok;
        }
        detail::Table t;
        t.row("F", f.describe());
        t.row("G", g.describe());
        t.row("mode", mode);
        if (mode == "fixed") {
            t.row("alpha", format_short(*c.alpha));
            t.row("G(k) = F(alpha k)", detail::opt_bool(c.def22_fg));
            t.row("F(k) = G(alpha k)", detail::opt_bool(c.def22_gf));
            t.row("Q_F(s) = Q_G(1-alpha+alpha s)", detail::opt_bool(c.def21_fg));
            t.row("Q_G(s) = Q_F(1-alpha+alpha s)", detail::opt_bool(c.def21_gf));
        } else {
            t.row("thinning witness F vs G", detail::opt_rational(c.def21_witness_fg));
            t.row("thinning witness G vs F", detail::opt_rational(c.def21_witness_gf));
            t.row("d.f. scale witness G = F_alpha", detail::opt_estimate(c.def22_witness_fg));
            t.row("d.f. scale witness F = G_alpha", detail::opt_estimate(c.def22_witness_gf));
        }
        emit(output_.format == "csv" ? t.csv() : t.render());
        return ok;
    }

    int cmd_thin() {
        const DiscreteDist d = single_.build("--q/--mix");
        const auto base = pgf_of(d);
        if (!base.exact) throw domain_error(d.describe() + " has no closed-form PGF");
        const ScaleParam alpha(parse_rational(alpha_));
        const auto thinned = thin(*base.exact, alpha);
        if (output_.format == "json") {
            report::ReportDocument doc;
            doc.command = "thin";
            doc.inputs = {{"distribution", d.describe()}, {"alpha", format_rational(alpha.value())}};
            doc.results = {{"pgf", report::pgf(*base.exact)}, {"thinned", report::pgf(thinned)}};
            emit_document(doc);
            return ok;
        }
        detail::Table t;
        t.row("distribution", d.describe());
        t.row("alpha", format_short(alpha.value()));
        t.row("Q(s)", to_string(*base.exact));
        t.row("Q(1-alpha+alpha s)", to_string(thinned));
        emit(output_.format == "csv" ? t.csv() : t.render());
        return ok;
    }

    int cmd_scale() {
        const DiscreteDist d = single_.build("--q/--mix");
        const ScaleParam alpha(parse_rational(alpha_));
        const DiscreteDist scaled = df_scale(d, alpha);
        const auto p = pgf_of(scaled);
        std::optional<MixingDistribution> mix = scaled.moments()->exact_mixing();
        std::string identified = "none (irrational atom powers)";
        if (mix) identified = mix->atoms().size() == 1 ? "geometric(" + format_short(mix->atoms()[0].location) + ")"
                                                      : "mixture" + describe(*mix);

        if (output_.format == "json") {
            report::ReportDocument doc;
            doc.command = "scale";
            doc.inputs = {{"distribution", d.describe()}, {"alpha", format_rational(alpha.value())},
                          {"horizon", std::to_string(horizon_)}};
            report::json survival = report::json::array();
            for (std::size_t k = 0; k <= horizon_; ++k) survival.push_back(report::value(scaled.survival(k)));
            doc.results = {{"result", scaled.describe()},
                           {"identified_as", mix ? report::json(identified) : report::json(nullptr)},
                           {"pgf", p.exact ? report::pgf(*p.exact) : report::json(nullptr)},
                           {"survival", survival}};
            emit_document(doc);
            return ok;
        }
        if (output_.format == "csv") {
            std::ostringstream os;
            os << "k,survival,df\n";
            for (std::size_t k = 0; k <= horizon_; ++k)
                os << k << "," << detail::show(scaled.survival(k)) << "," << detail::show(scaled.df(k)) << "\n";
            emit(os.str());
            return ok;
        }
        detail::Table t;
        t.row("distribution", d.describe());
        t.row("alpha", format_short(alpha.value()));
        t.row("scaled", scaled.describe());
        t.row("identified as", identified);
        t.row("PGF", p.exact ? to_string(*p.exact) : "no closed form");
        for (std::size_t k = 0; k <= horizon_; ++k) t.row("m(" + std::to_string(k) + ")", detail::show(scaled.survival(k)));
        emit(t.render());
        return ok;
    }

    int cmd_pmf() {
        const DiscreteDist d = single_.build("--q/--mix");
        if (count_ < 1) throw domain_error("--n must be at least 1");
        if (output_.format == "json") {
            report::ReportDocument doc;
            doc.command = "pmf";
            doc.inputs = {{"distribution", d.describe()}, {"n", std::to_string(count_)}};
            report::json pmf = report::json::array(), df = report::json::array(), surv = report::json::array();
            for (std::size_t k = 0; k < count_; ++k) {
                pmf.push_back(report::value(d.pmf(k)));
                df.push_back(report::value(d.df(k)));
                surv.push_back(report::value(d.survival(k)));
            }
            doc.results = {{"pmf", pmf}, {"df", df}, {"survival", surv}};
            emit_document(doc);
            return ok;
        }
        std::ostringstream os;
        const bool csv = output_.format == "csv";
        os << (csv ? "k,pmf,df,survival\n" : "  k  pmf  F(k)=P(X<k)  m(k)=P(X>=k)\n");
        for (std::size_t k = 0; k < count_; ++k) {
            const char* sep = csv ? "," : "  ";
            os << (csv ? "" : "  ") << k << sep << detail::show(d.pmf(k)) << sep << detail::show(d.df(k)) << sep
               << detail::show(d.survival(k)) << "\n";
        }
        emit(os.str());
        return ok;
    }

    int cmd_validate() {
        std::vector<Value> prefix;
        std::string source;
        if (!values_.empty()) {
            if (single_.given()) throw CLI::ValidationError("--values", "cannot be combined with --q/--mix");
            for (const auto& r : detail::parse_list(values_)) prefix.push_back(Value::of(r));
            source = "explicit";
        } else {
            const DiscreteDist d = single_.build("--q/--mix/--values");
            MomentSequence seq = *d.moments();
            if (!alpha_.empty()) seq = seq.rescaled(ScaleParam(parse_rational(alpha_)).value());
            prefix = seq.prefix(prefix_);
            source = d.describe() + (alpha_.empty() ? "" : " scaled by " + alpha_);
        }
        const auto result = completely_monotone_check(std::span<const Value>(prefix), order_);
        const bool exact = std::all_of(prefix.begin(), prefix.end(), [](const Value& v) { return v.is_exact(); });

        if (output_.format == "json") {
            report::ReportDocument doc;
            doc.command = "validate-moments";
            doc.inputs = {{"source", source}, {"prefix", std::to_string(prefix.size() - 1)},
                          {"order", std::to_string(order_)}};
            report::json failure = nullptr;
            if (result.first_failure)
                failure = {{"j", result.first_failure->first}, {"k", result.first_failure->second}};
            doc.results = {{"passed", result.passed},
                           {"first_failure", failure},
                           {"exact", exact},
                           {"scope", "finite prefix; a pass is consistent with, not a proof of, a moment sequence"}};
            emit_document(doc);
            return ok;
        }
        if (output_.format == "csv") {
            std::ostringstream os;
            os << "passed,j,k\n" << (result.passed ? "true" : "false") << ",";
            if (result.first_failure) os << result.first_failure->first << "," << result.first_failure->second;
            else os << ",";
            os << "\n";
            emit(os.str());
            return ok;
        }
        detail::Table t;
        t.row("source", source);
        t.row("prefix", "m(0.." + std::to_string(prefix.size() - 1) + ")");
        t.row("order", std::to_string(order_));
        t.row("arithmetic", exact ? "exact" : "float (1e-12)");
        t.row("completely monotone", result.passed ? "consistent (finite prefix)" : "no");
        if (result.first_failure)
            t.row("first failure", "j=" + std::to_string(result.first_failure->first) +
                                       ", k=" + std::to_string(result.first_failure->second));
        emit(t.render());
        return ok;
    }

    CLI::App app_;
    std::ostream* out_ = nullptr;
    detail::Output output_;
    std::vector<std::string> diagnostics_;
    int code_ = ok;

    std::string repro_q_ = "1/4";
    std::string repro_alpha_ = "1/2";
    bool allow_float_ = false;
    std::size_t horizon_ = default_horizon;

    detail::DistOption first_, second_, single_;
    std::string alpha_;
    std::string mode_;
    std::size_t count_ = 8;
    std::string values_;
    std::size_t prefix_ = 16;
    std::size_t order_ = 4;
};

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    App app;
    return app.run(argc, argv, out, err);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"same-type"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace sametype::cli
