#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "gf2m/field.hpp"
#include "render.hpp"

namespace gf2m::cli {

struct Context {
  Format format = Format::Table;
  Notation notation = Notation::Unicode;
  std::ostream* out = nullptr;
};

// Field from --m and an optional --poly text.
Field make_field(unsigned m, const std::string& poly);
// "a^N", "α^N", "alpha^N", or any polynomial encoding of degree < m.
Element parse_element(const Field& field, const std::string& text);

void cmd_field_table(const Context& ctx, unsigned m, const std::string& poly);
void cmd_field_ops(const Context& ctx, unsigned m, const std::string& poly, const std::string& a, const std::string& b);
void cmd_field_inverse(const Context& ctx, unsigned m, const std::string& poly, const std::string& a);
void cmd_minpolys(const Context& ctx, unsigned m, const std::string& poly);
void cmd_bases(const Context& ctx, unsigned m, const std::string& poly);
void cmd_constmul(const Context& ctx, unsigned m, const std::string& poly, std::uint64_t power, const std::string& emit);
void cmd_mastrovito(const Context& ctx, unsigned m, const std::string& poly, const std::string& a,
                    const std::string& b, const std::string& emit);
void cmd_serial(const Context& ctx, unsigned m, const std::string& poly, const std::string& a, const std::string& b,
                const std::string& mode);
void cmd_lfsr_divide(const Context& ctx, const std::string& g, const std::string& p, const std::string& trace);
void cmd_lfsr_period(const Context& ctx, const std::string& g, bool external, const std::string& seed);
void cmd_code_analyze(const Context& ctx, const std::string& path, std::optional<std::size_t> k);
void cmd_report_gates(const Context& ctx, unsigned m, const std::string& poly);
void cmd_report_complexity(const Context& ctx, unsigned m, unsigned k);
void cmd_errata(const Context& ctx);
void cmd_poly_check(const Context& ctx, const std::string& poly);

}  // namespace gf2m::cli
