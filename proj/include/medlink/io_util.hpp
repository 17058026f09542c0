#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace medlink {

// Reads a whole file into memory. Files whose name ends in ".gz" are
// inflated transparently.
std::string read_text_file(const std::string& path);

std::string to_lower_ascii(std::string_view s);
std::string trim(std::string_view s);

// Splits on a single separator, keeping empty fields.
std::vector<std::string> split(std::string_view s, char sep);

// Little-endian binary primitives shared by the sidecar and checkpoint
// formats. All readers throw std::runtime_error on truncated input.
void put_u8(std::ostream& out, uint8_t v);
void put_u32(std::ostream& out, uint32_t v);
void put_f32(std::ostream& out, float v);
void put_f64(std::ostream& out, double v);
void put_string(std::ostream& out, const std::string& s);  // u32 length + bytes

uint8_t get_u8(std::istream& in);
uint32_t get_u32(std::istream& in);
float get_f32(std::istream& in);
double get_f64(std::istream& in);
std::string get_string(std::istream& in);

}  // namespace medlink
