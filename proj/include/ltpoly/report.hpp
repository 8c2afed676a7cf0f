// Deterministic CSV/JSON rendering of convergence tables: fixed column set,
// LF endings, scientific-notation numerics with enough digits to reparse
// bit-exactly at their stated precision.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ltpoly/sto_integrals.hpp"

namespace ltpoly {

// Header `method,alpha,nu,N,value,analytic,rel_err` plus one line per row,
// sorted by (method, alpha, N); alpha renders empty for basis routes without
// one.  Rows must be non-empty.
std::string csv_string(std::vector<ConvergenceRow> rows);
void emit_csv(const std::vector<ConvergenceRow>& rows, std::ostream& out);
void emit_csv(const std::vector<ConvergenceRow>& rows, const std::string& path);

// The same rows as a JSON array of objects with identical field names;
// numeric strings match the CSV rendering byte for byte.
std::string json_string(std::vector<ConvergenceRow> rows);
void emit_json(const std::vector<ConvergenceRow>& rows, std::ostream& out);
void emit_json(const std::vector<ConvergenceRow>& rows, const std::string& path);

}  // namespace ltpoly
