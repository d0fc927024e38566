#pragma once

#include "antialg/antialgebra.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace al {

class ParseError : public std::runtime_error
{
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

struct AlgebraFile
{
    Antialgebra algebra;
    std::optional<Module> module;
};

// algebra NAME / even: labels / odd: labels / a * b = terms,
// then optionally module NAME / even: / odd: / a . b = terms.
// Omitted products are zero; the transposed product follows from SkewP.
AlgebraFile parse_algebra(std::istream& in);
AlgebraFile load_algebra(const std::string& path);

// A file holding only a module block, acting on the given algebra.
Module parse_module(std::istream& in, const Antialgebra& base);
Module load_module(const std::string& path, const Antialgebra& base);

// Writes explicit entries only, so parse_algebra(write_algebra(a)) == a.
void write_algebra(std::ostream& out, const Antialgebra& a, const Module* m = nullptr);

} // namespace al
