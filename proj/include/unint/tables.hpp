#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

namespace unint {

// Deterministic table rendering shared by the CLI and the golden-file tests.
// All layouts are deterministic.

/// Class label in ascending cycle notation with exponents, e.g. "(1^2,2)".
std::string class_label(const class Partition& c);
/// Signature label in descending notation with exponents, e.g. "(2,1)", "(1^3)".
std::string signature_label(const class Partition& f);

std::string render_primitive_table(int pmax);
std::string render_stack_table(int pmax);
std::string render_special_double_fan_table(int pmax);
std::string render_character_table(int p);
/// Everything the `tables` subcommand prints, for p = 1..pmax.
std::string render_all_tables(int pmax);
nlohmann::json tables_json(int pmax);

}  // namespace unint
