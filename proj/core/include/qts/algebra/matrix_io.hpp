#pragma once

#include <iosfwd>
#include <string>

#include "qts/algebra/bool_matrix.hpp"
#include "qts/algebra/field_matrix.hpp"

namespace qts::algebra {

// Text format: header line "rows cols modulus", then rows*cols entries
// row-major, whitespace separated. Boolean matrices use modulus 2.
void write_matrix(std::ostream& os, const FieldMatrix& m);
void write_matrix(std::ostream& os, const BoolMatrix& m);
FieldMatrix read_field_matrix(std::istream& is);
BoolMatrix read_bool_matrix(std::istream& is);

FieldMatrix load_field_matrix(const std::string& path);
BoolMatrix load_bool_matrix(const std::string& path);
void save_matrix(const std::string& path, const FieldMatrix& m);
void save_matrix(const std::string& path, const BoolMatrix& m);

}  // namespace qts::algebra
