#include "whitdim/tables.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "whitdim/formulas.hpp"
#include "whitdim/json_writer.hpp"

namespace whitdim {

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::s_cochar: return "s_cochar";
    case Quantity::dim: return "dim";
    case Quantity::kappa: return "kappa";
    case Quantity::m: return "m";
    case Quantity::d1: return "d1";
    case Quantity::d2: return "d2";
    case Quantity::a_min: return "a_min";
  }
  throw InternalError("to_string(Quantity): unknown tag");
}

std::optional<Quantity> parse_quantity(std::string_view s) {
  if (s == "s_cochar") return Quantity::s_cochar;
  if (s == "dim") return Quantity::dim;
  if (s == "kappa") return Quantity::kappa;
  if (s == "m") return Quantity::m;
  if (s == "d1") return Quantity::d1;
  if (s == "d2") return Quantity::d2;
  if (s == "a_min") return Quantity::a_min;
  return std::nullopt;
}

std::string_view to_string(TableFormat f) {
  switch (f) {
    case TableFormat::ascii: return "ascii";
    case TableFormat::csv: return "csv";
    case TableFormat::json: return "json";
  }
  throw InternalError("to_string(TableFormat): unknown tag");
}

std::optional<TableFormat> parse_format(std::string_view s) {
  if (s == "ascii") return TableFormat::ascii;
  if (s == "csv") return TableFormat::csv;
  if (s == "json") return TableFormat::json;
  return std::nullopt;
}

namespace {

BigInt cell_value(const CoverParams& p, Quantity q) {
  switch (q) {
    case Quantity::s_cochar: return s_cochar_closed_v1(p);
    case Quantity::dim: return whittaker_dimension(p);
    case Quantity::kappa: return derive_invariants(p).kappa;
    case Quantity::m: return derive_invariants(p).M;
    case Quantity::d1: return diagonal_numbers(p).d1;
    case Quantity::d2: return diagonal_numbers(p).d2;
    case Quantity::a_min: return a_min_closed(p);
  }
  throw InternalError("cell_value: unknown quantity tag");
}

}  // namespace

TableGrid build_table(std::int64_t r, std::int64_t n, Quantity quantity) {
  if (r < 1 || n < 1) throw UsageError("build_table: r and n must be >= 1");
  TableGrid grid;
  grid.r = r;
  grid.n = n;
  grid.quantity = quantity;
  grid.cells.resize(static_cast<std::size_t>(n));
  for (std::int64_t c = 0; c < n; ++c) {
    auto& row = grid.cells[static_cast<std::size_t>(c)];
    row.reserve(static_cast<std::size_t>(n));
    for (std::int64_t d = 0; d < n; ++d) {
      row.push_back(cell_value(canonicalize(c, d, r, n), quantity));
    }
  }
  return grid;
}

AnnotatedGrid annotate_diagonals(const TableGrid& grid) {
  AnnotatedGrid out;
  out.grid = grid;
  std::int64_t n = grid.n;
  out.diag.resize(static_cast<std::size_t>(n));
  out.slope_minus1.assign(static_cast<std::size_t>(n), {});
  out.slope_r_minus1.assign(static_cast<std::size_t>(n), {});
  for (std::int64_t c = 0; c < n; ++c) {
    auto& row = out.diag[static_cast<std::size_t>(c)];
    row.reserve(static_cast<std::size_t>(n));
    for (std::int64_t d = 0; d < n; ++d) {
      CoverParams p = canonicalize(c, d, grid.r, n);
      row.push_back(diagonal_numbers(p));
      std::int64_t k1 = ((c - d) % n + n) % n;
      std::int64_t k2 = static_cast<std::int64_t>(
          (BigInt(c) + BigInt(grid.r - 1) * d) % n);
      out.slope_minus1[static_cast<std::size_t>(k1)].emplace_back(c, d);
      out.slope_r_minus1[static_cast<std::size_t>(k2)].emplace_back(c, d);
    }
  }
  return out;
}

namespace {

std::string render_csv(const TableGrid& grid) {
  std::string out = "c\\d";
  for (std::int64_t d = 0; d < grid.n; ++d) {
    out += ',';
    out += std::to_string(d);
  }
  out += '\n';
  for (std::int64_t c = 0; c < grid.n; ++c) {
    out += std::to_string(c);
    for (const BigInt& cell : grid.cells[static_cast<std::size_t>(c)]) {
      out += ',';
      out += cell.str();
    }
    out += '\n';
  }
  return out;
}

std::string render_ascii(const TableGrid& grid) {
  std::vector<std::vector<std::string>> text(static_cast<std::size_t>(grid.n));
  std::size_t width = 0;
  for (std::int64_t c = 0; c < grid.n; ++c) {
    for (const BigInt& cell : grid.cells[static_cast<std::size_t>(c)]) {
      std::string s = cell.str();
      width = std::max(width, s.size());
      text[static_cast<std::size_t>(c)].push_back(std::move(s));
    }
  }
  std::string out;
  for (const auto& row : text) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ' ';
      out.append(width - row[j].size(), ' ');
      out += row[j];
    }
    out += '\n';
  }
  return out;
}

void write_grid_fields(JsonWriter& w, const TableGrid& grid) {
  w.key("r").value(grid.r);
  w.key("n").value(grid.n);
  w.key("quantity").value(to_string(grid.quantity));
  w.key("cells").begin_array();
  for (const auto& row : grid.cells) {
    w.begin_array();
    for (const BigInt& cell : row) w.value(cell);
    w.end_array();
  }
  w.end_array();
}

std::string render_json(const TableGrid& grid) {
  JsonWriter w;
  w.begin_object();
  write_grid_fields(w, grid);
  w.end_object();
  return std::move(w).str() + "\n";
}

}  // namespace

std::string render(const TableGrid& grid, TableFormat format) {
  switch (format) {
    case TableFormat::csv: return render_csv(grid);
    case TableFormat::ascii: return render_ascii(grid);
    case TableFormat::json: return render_json(grid);
  }
  throw InternalError("render: unknown format tag");
}

std::string render_annotated_json(const AnnotatedGrid& annotated) {
  JsonWriter w;
  w.begin_object();
  write_grid_fields(w, annotated.grid);
  w.key("d1").begin_array();
  for (const auto& row : annotated.diag) {
    w.begin_array();
    for (const auto& dn : row) w.value(dn.d1);
    w.end_array();
  }
  w.end_array();
  w.key("d2").begin_array();
  for (const auto& row : annotated.diag) {
    w.begin_array();
    for (const auto& dn : row) w.value(dn.d2);
    w.end_array();
  }
  w.end_array();
  auto write_groups =
      [&](const char* name,
          const std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>>& groups) {
        w.key(name).begin_object();
        for (std::size_t k = 0; k < groups.size(); ++k) {
          w.key(std::to_string(k)).begin_array();
          for (const auto& [c, d] : groups[k]) {
            w.begin_array();
            w.value(c);
            w.value(d);
            w.end_array();
          }
          w.end_array();
        }
        w.end_object();
      };
  write_groups("diagonals_slope_minus1", annotated.slope_minus1);
  write_groups("diagonals_slope_r_minus1", annotated.slope_r_minus1);
  w.end_object();
  return std::move(w).str() + "\n";
}

namespace {

// Tiny strict scanner for the machine formats this module itself emits.
struct Scanner {
  const std::string& text;
  std::size_t pos = 0;

  explicit Scanner(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char ch) {
    skip_ws();
    if (pos < text.size() && text[pos] == ch) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char ch) {
    if (!eat(ch))
      throw UsageError(std::string("parse_json: expected '") + ch + "' at offset " +
                       std::to_string(pos));
  }
  std::string string_token() {
    expect('"');
    std::string out;
    while (pos < text.size() && text[pos] != '"') out += text[pos++];
    expect('"');
    return out;
  }
  BigInt number_token() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw UsageError("parse_json: expected a number at offset " +
                                       std::to_string(start));
    return BigInt(text.substr(start, pos - start));
  }
};

}  // namespace

TableGrid parse_csv(const std::string& text, std::int64_t r, Quantity quantity) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("c\\d", 0) != 0)
    throw UsageError("parse_csv: missing c\\d header row");
  TableGrid grid;
  grid.r = r;
  grid.quantity = quantity;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<BigInt> row;
    std::size_t start = line.find(',');
    if (start == std::string::npos) throw UsageError("parse_csv: data row without cells");
    ++start;
    while (start <= line.size()) {
      std::size_t comma = line.find(',', start);
      std::size_t end = (comma == std::string::npos) ? line.size() : comma;
      row.emplace_back(line.substr(start, end - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    grid.cells.push_back(std::move(row));
  }
  grid.n = static_cast<std::int64_t>(grid.cells.size());
  for (const auto& row : grid.cells)
    if (static_cast<std::int64_t>(row.size()) != grid.n)
      throw UsageError("parse_csv: grid is not n x n");
  return grid;
}

TableGrid parse_json(const std::string& text) {
  Scanner s(text);
  TableGrid grid;
  bool have_r = false, have_n = false, have_quantity = false, have_cells = false;
  s.expect('{');
  if (!s.eat('}')) {
    do {
      std::string key = s.string_token();
      s.expect(':');
      if (key == "r") {
        grid.r = static_cast<std::int64_t>(s.number_token());
        have_r = true;
      } else if (key == "n") {
        grid.n = static_cast<std::int64_t>(s.number_token());
        have_n = true;
      } else if (key == "quantity") {
        auto q = parse_quantity(s.string_token());
        if (!q) throw UsageError("parse_json: unknown quantity tag");
        grid.quantity = *q;
        have_quantity = true;
      } else if (key == "cells") {
        s.expect('[');
        if (!s.eat(']')) {
          do {
            s.expect('[');
            std::vector<BigInt> row;
            if (!s.eat(']')) {
              do {
                row.push_back(s.number_token());
              } while (s.eat(','));
              s.expect(']');
            }
            grid.cells.push_back(std::move(row));
          } while (s.eat(','));
          s.expect(']');
        }
        have_cells = true;
      } else {
        throw UsageError("parse_json: unexpected key \"" + key + "\"");
      }
    } while (s.eat(','));
    s.expect('}');
  }
  if (!have_r || !have_n || !have_quantity || !have_cells)
    throw UsageError("parse_json: missing required table fields");
  if (static_cast<std::int64_t>(grid.cells.size()) != grid.n)
    throw UsageError("parse_json: cell row count does not match n");
  for (const auto& row : grid.cells)
    if (static_cast<std::int64_t>(row.size()) != grid.n)
      throw UsageError("parse_json: grid is not n x n");
  return grid;
}

}  // namespace whitdim
