#pragma once

// Line-oriented grammar for autonomous polynomial ODE systems:
//
//   file      := header* equation+
//   header    := "vars:" ident ("," ident)*
//              | "params:" ident "=" rational ("," ident "=" rational)*
//   equation  := ident "'" "=" expr
//   expr      := ["-"] term (("+"|"-") term)*
//   term      := factor ("*" factor)*
//   factor    := base ("^" uint)?
//   base      := ident | rational | "(" expr ")"
//   rational  := int ("/" uint)?
//
// Parameters are substituted as exact rationals at parse time. Without a
// "vars:" header the variables are the equation left-hand sides in order.

#include <painleve/polysystem.hpp>

#include <stdexcept>
#include <string>

namespace painleve {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& reason)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                             ": " + reason),
          line_(line),
          col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_, col_;
};

PolySystem parse_system(const std::string& text);

}  // namespace painleve
