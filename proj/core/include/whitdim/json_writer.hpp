#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "whitdim/arithmetic.hpp"

namespace whitdim {

// Minimal deterministic JSON emitter. Exists because report fields are
// arbitrary-precision integers, which must be printed losslessly as plain
// decimal numerals; general-purpose JSON libraries cap out at 64 bits.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();

  JsonWriter& key(std::string_view name);

  JsonWriter& value(std::string_view s);  // quoted, escaped
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(const BigInt& v);
  JsonWriter& value(bool v);
  JsonWriter& value_null();
  JsonWriter& value_raw(std::string_view preformatted);

  std::string str() && { return std::move(out_); }
  const std::string& str() const& { return out_; }

 private:
  void before_value();

  std::string out_;
  std::vector<bool> needs_comma_;
  bool pending_key_ = false;
};

std::string json_escape(std::string_view s);

}  // namespace whitdim
