#include "antialg/io.hpp"

#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace al {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s)
{
    std::istringstream is(s);
    std::vector<std::string> r;
    for (std::string t; is >> t;)
        r.push_back(t);
    return r;
}

Rational parse_coeff(int line, const std::string& text)
{
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument&) {
        throw ParseError(line, "bad coefficient '" + text + "'");
    }
}

int parse_label(int line, const GradedSpace& s, const std::string& label)
{
    auto g = s.find(label);
    if (!g)
        throw ParseError(line, "unknown label '" + label + "'");
    return *g;
}

Vector parse_terms(int line, const GradedSpace& s, const std::string& rhs)
{
    Vector v;
    int sign = 1;
    bool expect_term = true;
    for (std::string tok : split_ws(rhs)) {
        if (tok == "+" || tok == "-") {
            if (tok == "-")
                sign = -sign;
            expect_term = true;
            continue;
        }
        if (!expect_term)
            throw ParseError(line, "missing '+' or '-' before '" + tok + "'");
        if (tok.size() > 1 && tok[0] == '-') {
            sign = -sign;
            tok = tok.substr(1);
        }
        auto star = tok.find('*');
        if (star != std::string::npos && star > 0 && star + 1 < tok.size() && !s.find(tok)) {
            Rational c = parse_coeff(line, tok.substr(0, star));
            v.add(parse_label(line, s, tok.substr(star + 1)), c * sign);
        } else if (tok == "0") {
        } else {
            v.add(parse_label(line, s, tok), sign);
        }
        sign = 1;
        expect_term = false;
    }
    if (expect_term)
        throw ParseError(line, "missing term");
    return v;
}

struct Section
{
    std::string name;
    std::optional<std::vector<std::string>> even, odd;
    SpacePtr space;
    int line = 0;

    SpacePtr materialize(int at)
    {
        if (!space) {
            try {
                space = make_space(even.value_or(std::vector<std::string>{}), odd.value_or(std::vector<std::string>{}));
            } catch (const std::invalid_argument& e) {
                throw ParseError(at, e.what());
            }
        }
        return space;
    }
};

struct Parser
{
    std::optional<Section> alg, mod;
    std::optional<ProductTable> table;
    std::optional<Module> module;
    std::optional<Antialgebra> base;
    std::set<std::pair<int, int>> seen_products, seen_actions;
    bool module_only = false;

    void header(int line, Section& s, const std::string& key, const std::string& rest)
    {
        if (s.space)
            throw ParseError(line, "'" + key + ":' after entries");
        auto& slot = key == "even" ? s.even : s.odd;
        if (slot)
            throw ParseError(line, "duplicate '" + key + ":' line");
        slot = split_ws(rest);
    }

    void finish_algebra(int line)
    {
        if (!table) {
            table.emplace(alg->materialize(line));
        }
        if (!base)
            base.emplace(*table, alg->name);
    }

    void line(int no, const std::string& raw)
    {
        std::string l = trim(raw.substr(0, raw.find('#')));
        if (l.empty())
            return;
        auto words = split_ws(l);
        if (words[0] == "algebra") {
            if (module_only)
                throw ParseError(no, "unexpected algebra block in a module file");
            if (alg)
                throw ParseError(no, "duplicate algebra block");
            if (words.size() != 2)
                throw ParseError(no, "expected 'algebra NAME'");
            alg.emplace();
            alg->name = words[1];
            alg->line = no;
            return;
        }
        if (words[0] == "module") {
            if (mod)
                throw ParseError(no, "duplicate module block");
            if (!alg && !module_only)
                throw ParseError(no, "module block before the algebra block");
            if (words.size() != 2)
                throw ParseError(no, "expected 'module NAME'");
            if (!module_only)
                finish_algebra(no);
            mod.emplace();
            mod->name = words[1];
            mod->line = no;
            return;
        }
        Section* cur = mod ? &*mod : alg ? &*alg : nullptr;
        if (!cur)
            throw ParseError(no, "expected 'algebra NAME' first");
        auto colon = l.find(':');
        if (colon != std::string::npos) {
            std::string key = trim(l.substr(0, colon));
            if (key != "even" && key != "odd")
                throw ParseError(no, "unknown header '" + key + "'");
            header(no, *cur, key, l.substr(colon + 1));
            return;
        }
        auto eq = l.find('=');
        if (eq == std::string::npos)
            throw ParseError(no, "expected an entry 'a " + std::string(mod ? "." : "*") + " b = terms'");
        auto lhs = split_ws(l.substr(0, eq));
        std::string op = mod ? "." : "*";
        if (lhs.size() != 3 || lhs[1] != op)
            throw ParseError(no, "left side must read 'a " + op + " b'");
        if (mod) {
            SpacePtr ms = mod->materialize(no);
            if (!module)
                module.emplace(base->space_ptr(), ms, mod->name);
            int a = parse_label(no, base->space(), lhs[0]);
            int b = parse_label(no, *ms, lhs[2]);
            if (!seen_actions.insert({a, b}).second)
                throw ParseError(no, "duplicate action entry");
            module->set(a, b, parse_terms(no, *ms, l.substr(eq + 1)));
        } else {
            SpacePtr s = alg->materialize(no);
            if (!table)
                table.emplace(s);
            int a = parse_label(no, *s, lhs[0]);
            int b = parse_label(no, *s, lhs[2]);
            if (!seen_products.insert({a, b}).second)
                throw ParseError(no, "duplicate product entry");
            table->set(a, b, parse_terms(no, *s, l.substr(eq + 1)));
        }
    }

    void finish_module(int line)
    {
        if (mod && !module)
            module.emplace(base->space_ptr(), mod->materialize(line), mod->name);
    }
};

} // namespace

AlgebraFile parse_algebra(std::istream& in)
{
    Parser p;
    int no = 0;
    for (std::string l; std::getline(in, l);)
        p.line(++no, l);
    if (!p.alg)
        throw ParseError(no, "no algebra block");
    p.finish_algebra(no);
    p.finish_module(no);
    return {*p.base, p.module};
}

AlgebraFile load_algebra(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot open " + path);
    return parse_algebra(f);
}

Module parse_module(std::istream& in, const Antialgebra& base)
{
    Parser p;
    p.module_only = true;
    p.base = base;
    int no = 0;
    for (std::string l; std::getline(in, l);)
        p.line(++no, l);
    if (!p.mod)
        throw ParseError(no, "no module block");
    p.finish_module(no);
    return *p.module;
}

Module load_module(const std::string& path, const Antialgebra& base)
{
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot open " + path);
    return parse_module(f, base);
}

namespace {

std::string terms(const GradedSpace& s, const Vector& v)
{
    if (v.is_zero())
        return "0";
    std::string r;
    bool first = true;
    for (const auto& [g, c] : v) {
        Rational a = c < 0 ? Rational(-c) : c;
        if (!first)
            r += c < 0 ? " - " : " + ";
        else if (c < 0)
            r += "-";
        r += (a == 1 ? "" : to_string(a) + "*") + s.label(g);
        first = false;
    }
    return r;
}

std::string join(const std::vector<std::string>& v)
{
    std::string r;
    for (const auto& s : v)
        r += " " + s;
    return r;
}

} // namespace

void write_algebra(std::ostream& out, const Antialgebra& a, const Module* m)
{
    const GradedSpace& s = a.space();
    out << "algebra " << (a.name().empty() ? "unnamed" : a.name()) << "\n";
    out << "even:" << join(s.even_labels()) << "\n";
    out << "odd:" << join(s.odd_labels()) << "\n";
    for (const auto& [k, v] : a.table().explicit_entries())
        out << s.label(k.first) << " * " << s.label(k.second) << " = " << terms(s, v) << "\n";
    if (!m)
        return;
    const GradedSpace& ms = m->space();
    out << "module " << (m->name().empty() ? "unnamed" : m->name()) << "\n";
    out << "even:" << join(ms.even_labels()) << "\n";
    out << "odd:" << join(ms.odd_labels()) << "\n";
    for (const auto& [k, v] : m->entries())
        out << s.label(k.first) << " . " << ms.label(k.second) << " = " << terms(ms, v) << "\n";
}

} // namespace al
