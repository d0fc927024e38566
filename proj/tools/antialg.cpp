#include "antialg/cohomology.hpp"
#include "antialg/gerstenhaber.hpp"
#include "antialg/io.hpp"
#include "antialg/zoo.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace al;

namespace {

constexpr const char* kSchema = "antialg-report/1";

enum Exit { kPass = 0, kMathFailure = 1, kInputError = 2 };

struct Options
{
    std::string input;
    std::string coefficients = "trivial";
    std::string format = "text";
    std::string target;
    int kmax = 3;
    int window = 0;
    bool representatives = false;
};

class Out
{
public:
    explicit Out(bool structured) : structured_(structured) {}

    bool structured() const { return structured_; }

    template <class T>
    void kv(const std::string& key, const T& value)
    {
        if (structured_)
            os_ << key << "=" << value << "\n";
    }

    void text(const std::string& line)
    {
        if (!structured_)
            os_ << line << "\n";
    }

    std::string str() const { return os_.str(); }

private:
    bool structured_;
    std::ostringstream os_;
};

std::string dims(const GradedSpace& s) { return std::to_string(s.dim0()) + "|" + std::to_string(s.dim1()); }

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> r;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);)
        r.push_back(l);
    return r;
}

void axiom_section(Out& out, const std::string& name, const GradedSpace& s, const AxiomReport& r)
{
    out.kv("check." + name + ".checked", r.checked);
    out.kv("check." + name + ".skipped", r.skipped);
    out.kv("check." + name + ".violations", r.violations.size());
    out.text(name + ": checked " + std::to_string(r.checked) + ", skipped " + std::to_string(r.skipped) +
             ", violations " + std::to_string(r.violations.size()));
    auto ls = lines(format_report(s, r));
    for (std::size_t i = 0; i < ls.size(); ++i) {
        out.kv("violation." + name + "." + std::to_string(i), ls[i]);
        out.text("  " + ls[i]);
    }
}

bool zero_square_section(Out& out, const GradedSpace& s, const ZeroSquareReport& z)
{
    out.kv("check.zero_square.checked", z.checked);
    out.kv("check.zero_square.skipped", z.skipped);
    out.kv("check.zero_square.nonzero", z.nonzero.size());
    out.kv("check.zero_square.mismatches", z.expansion_mismatch.size());
    out.text("zero_square: checked " + std::to_string(z.checked) + ", skipped " + std::to_string(z.skipped) +
             ", nonzero " + std::to_string(z.nonzero.size()) + ", mismatches " +
             std::to_string(z.expansion_mismatch.size()));
    auto ls = lines(format_report(s, AxiomReport{z.nonzero, 0, 0}));
    for (std::size_t i = 0; i < ls.size(); ++i) {
        out.kv("violation.zero_square." + std::to_string(i), ls[i]);
        out.text("  [m,m] " + ls[i]);
    }
    return z.ok();
}

AlgebraFile load(const Options& o)
{
    return load_algebra(o.input);
}

Module coefficients(const Options& o, const Antialgebra& a)
{
    if (o.coefficients == "trivial")
        return trivial_module(a);
    if (o.coefficients == "adjoint")
        return adjoint_module(a);
    if (o.coefficients == "dual-adjoint")
        return dual_module(adjoint_module(a));
    return load_module(o.coefficients, a);
}

int cmd_check(const Options& o)
{
    AlgebraFile f = load(o);
    const Antialgebra& a = f.algebra;
    Out out(o.format == "structured");
    out.kv("schema", kSchema);
    out.kv("command", "check");
    out.kv("algebra", a.name());
    out.kv("dim", dims(a.space()));
    out.text("algebra " + a.name() + " (" + dims(a.space()) + ")");
    AxiomReport r1 = check_axioms(a);
    AxiomReport r2 = check_axioms_v2(a);
    axiom_section(out, "axioms", a.space(), r1);
    axiom_section(out, "axioms_v2", a.space(), r2);
    bool ok = r1.ok() && r2.ok();
    ok = zero_square_section(out, a.space(), zero_square_check(a)) && ok;
    if (f.module) {
        Semidirect sd = semidirect(a, *f.module);
        AxiomReport rm = check_axioms(sd.algebra);
        out.kv("module", f.module->name());
        out.text("module " + f.module->name() + " (" + dims(f.module->space()) + ")");
        axiom_section(out, "module_axioms", sd.algebra.space(), rm);
        ok = ok && rm.ok();
    }
    out.kv("result", ok ? "pass" : "fail");
    out.text(std::string("result: ") + (ok ? "pass" : "fail"));
    std::cout << out.str();
    return ok ? kPass : kMathFailure;
}

std::string pad(const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; }

int cmd_cohomology(const Options& o)
{
    AlgebraFile f = load(o);
    const Antialgebra& a = f.algebra;
    if (a.table().has_unknowns())
        throw std::invalid_argument("cohomology needs a finite structure without unknown products");
    if (!check_axioms(a).ok())
        throw std::invalid_argument(a.name() + " fails the antialgebra axioms; run 'antialg check' for details");
    Module m = coefficients(o, a);
    CochainContext ctx(a, m);
    ComplexReport rep = assemble_complex(ctx, o.kmax);
    auto rows = cohomology_dims(rep);
    Out out(o.format == "structured");
    out.kv("schema", kSchema);
    out.kv("command", "cohomology");
    out.kv("algebra", a.name());
    out.kv("coefficients", o.coefficients);
    out.kv("kmax", o.kmax);
    bool module_ok = check_axioms(ctx.algebra()).ok();
    out.kv("module_valid", module_ok ? "yes" : "no");
    out.text("algebra " + a.name() + ", coefficients " + o.coefficients + ", kmax " + std::to_string(o.kmax));
    if (!module_ok)
        out.text("warning: the coefficient module fails the module axioms");
    out.text(pad("k", 3) + pad("dim C^k", 10) + pad("rank d^k", 10) + pad("dim Z^k", 10) + pad("dim H^k", 10));
    for (const auto& r : rows) {
        std::string k = std::to_string(r.k);
        out.kv("row." + k + ".dim_cochains", r.dim_cochains);
        out.kv("row." + k + ".rank_delta", r.rank_delta);
        out.kv("row." + k + ".dim_cocycles", r.dim_cocycles);
        out.kv("row." + k + ".dim_cohomology", r.dim_cohomology);
        out.text(pad(k, 3) + pad(std::to_string(r.dim_cochains), 10) + pad(std::to_string(r.rank_delta), 10) +
                 pad(std::to_string(r.dim_cocycles), 10) + pad(std::to_string(r.dim_cohomology), 10));
    }
    long failing = 0;
    for (const auto& c : rep.checks) {
        if (c.ok())
            continue;
        ++failing;
        out.kv("composite." + c.name, std::to_string(c.failures) + " nonzero; " + c.witness);
        out.text("  nonzero composite " + c.name + ": " + c.witness);
    }
    out.kv("composites.checked", rep.checks.size());
    out.kv("composites.failing", failing);
    out.text("composites: " + std::to_string(rep.checks.size()) + " checked, " + std::to_string(failing) +
             " failing");
    if (o.representatives) {
        for (std::size_t i = 0; i < rep.matrices.size(); ++i) {
            const auto& d = rep.matrices[i];
            std::vector<Vector> span;
            if (i > 0)
                span = rep.matrices[i - 1].total().transpose().rows;
            int base = static_cast<int>(row_space_basis(span, d.source->dim()).size());
            int n = 0;
            for (const Vector& z : nullspace(d.total())) {
                span.push_back(z);
                int now = static_cast<int>(row_space_basis(span, d.source->dim()).size());
                if (now == base) {
                    span.pop_back();
                    continue;
                }
                base = now;
                std::string key = "rep." + std::to_string(d.source->degree()) + "." + std::to_string(n++);
                std::string text;
                for (const auto& [args, v] : d.source->cochain(z)) {
                    if (!text.empty())
                        text += "; ";
                    std::string t = "(";
                    for (std::size_t j = 0; j < args.x.size(); ++j)
                        t += (j ? "," : "") + ctx.space().label(args.x[j]);
                    t += ";";
                    for (std::size_t j = 0; j < args.y.size(); ++j)
                        t += (j ? "," : "") + ctx.space().label(args.y[j]);
                    text += t + ") -> " + format_vector(ctx.space(), v);
                }
                out.kv(key, text);
                out.text("H^" + std::to_string(d.source->degree()) + " representative: " + text);
            }
        }
    }
    bool ok = rep.ok();
    out.kv("result", ok ? "pass" : "fail");
    out.text(std::string("result: ") + (ok ? "pass" : "fail"));
    std::cout << out.str();
    return ok ? kPass : kMathFailure;
}

int default_window(const std::string& target)
{
    if (target == "eta" || target == "gf" || target == "dual-gf")
        return 4;
    if (target == "gv")
        return 5;
    return 6;
}

int cmd_verify(const Options& o)
{
    const auto& targets = verify_targets();
    if (std::find(targets.begin(), targets.end(), o.target) == targets.end())
        throw std::invalid_argument("unknown verify target '" + o.target + "'");
    int n = o.window > 0 ? o.window : default_window(o.target);
    VerifyReport r = verify_named(o.target, n);
    std::cout << (o.format == "structured" ? format_verify_structured(r) : format_verify_text(r));
    return r.ok() ? kPass : kMathFailure;
}

int cmd_bracket(const Options& o)
{
    AlgebraFile f = load(o);
    const Antialgebra& a = f.algebra;
    if (a.table().has_unknowns())
        throw std::invalid_argument("bracket needs a finite structure without unknown products");
    if (!table_is_parity_preserving(a.table()))
        throw std::invalid_argument("product table is not parity preserving");
    AlElement m(a.m());
    AlElement mm = al_bracket(m, m);
    Out out(o.format == "structured");
    out.kv("schema", kSchema);
    out.kv("command", "bracket");
    out.kv("algebra", a.name());
    out.text("[m,m] for " + a.name() + ":");
    auto ls = lines(format_multimap(mm.map()));
    out.kv("entries", ls.size());
    for (std::size_t i = 0; i < ls.size(); ++i) {
        out.kv("entry." + std::to_string(i), ls[i]);
        out.text("  " + ls[i]);
    }
    if (ls.empty())
        out.text("  0");
    bool ok = mm.map().is_zero();
    out.kv("result", ok ? "pass" : "fail");
    out.text(std::string("result: ") + (ok ? "pass" : "fail"));
    std::cout << out.str();
    return ok ? kPass : kMathFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact cohomology of Lie antialgebras"};
    app.require_subcommand(1);
    Options o;
    auto fmt = [&](CLI::App* c) {
        c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    };
    auto* check = app.add_subcommand("check", "Check the antialgebra axioms of a structure file");
    check->add_option("--input", o.input, "Structure file")->required();
    fmt(check);
    auto* coh = app.add_subcommand("cohomology", "Cohomology table of a finite antialgebra");
    coh->add_option("--input", o.input, "Structure file")->required();
    coh->add_option("--coefficients", o.coefficients, "trivial, adjoint, dual-adjoint or a module file");
    coh->add_option("--kmax", o.kmax, "Highest cochain degree")->check(CLI::PositiveNumber);
    coh->add_flag("--representatives", o.representatives, "Print cocycle representatives of H^k");
    fmt(coh);
    auto* ver = app.add_subcommand("verify", "Verify a named structure or cocycle on a window");
    ver->add_option("target", o.target, "gamma, eta, gf, dual-gf, gv, ak1-axioms or m1-axioms")->required();
    ver->add_option("--window", o.window, "Index window N")->check(CLI::PositiveNumber);
    fmt(ver);
    auto* br = app.add_subcommand("bracket", "Print [m,m] in al(V) for a structure file");
    br->add_option("--input", o.input, "Structure file")->required();
    fmt(br);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kPass : kInputError;
    }
    try {
        if (*check)
            return cmd_check(o);
        if (*coh)
            return cmd_cohomology(o);
        if (*ver)
            return cmd_verify(o);
        return cmd_bracket(o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << o.input << ": " << e.what() << "\n";
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kInputError;
}
