#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "whitdim/arithmetic.hpp"
#include "whitdim/cover.hpp"

namespace whitdim {

enum class Quantity { s_cochar, dim, kappa, m, d1, d2, a_min };

std::string_view to_string(Quantity q);
std::optional<Quantity> parse_quantity(std::string_view s);

// An n x n grid of one scalar quantity over (c, d), row index c, column
// index d, exactly as the visualization tables lay it out.
struct TableGrid {
  std::int64_t r = 1;
  std::int64_t n = 1;
  Quantity quantity = Quantity::s_cochar;
  std::vector<std::vector<BigInt>> cells;  // cells[c][d]

  friend bool operator==(const TableGrid&, const TableGrid&) = default;
};

// Every cell is computed through the closed forms, never the brute oracle.
TableGrid build_table(std::int64_t r, std::int64_t n, Quantity quantity);

// Per-cell diagonal numbers plus the diagonal groupings: cells sharing
// (c - d) mod n lie on one slope -1 diagonal, cells sharing
// (c + (r-1)d) mod n on one slope r-1 diagonal.
struct AnnotatedGrid {
  TableGrid grid;
  std::vector<std::vector<DiagonalNumbers>> diag;  // diag[c][d]
  // Index k holds the (c, d) cells of diagonal k, in row-major order.
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> slope_minus1;
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> slope_r_minus1;
};

AnnotatedGrid annotate_diagonals(const TableGrid& grid);

enum class TableFormat { ascii, csv, json };

std::string_view to_string(TableFormat f);
std::optional<TableFormat> parse_format(std::string_view s);

// Deterministic, byte-exact rendering. csv starts with the header row
// "c\d,0,1,...,n-1" and prefixes each data row with its c label; json is a
// single compact object {"r":..,"n":..,"quantity":"..","cells":[[..],..]};
// ascii right-pads every column to the widest entry. All end with '\n'.
std::string render(const TableGrid& grid, TableFormat format);

// json rendering with d1/d2 matrices and diagonal groupings attached.
std::string render_annotated_json(const AnnotatedGrid& grid);

// Inverses of render for the machine formats (ascii carries too little
// context to parse). csv does not carry r or the quantity, so the caller
// supplies them.
TableGrid parse_csv(const std::string& text, std::int64_t r, Quantity quantity);
TableGrid parse_json(const std::string& text);

}  // namespace whitdim
