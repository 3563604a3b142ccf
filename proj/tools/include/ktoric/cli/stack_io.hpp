#pragma once

#include "ktoric/stacks.hpp"

#include <json.hpp>

#include <filesystem>

namespace ktoric::cli {

using Json = nlohmann::ordered_json;

/// Integers outside the signed 64-bit range are written as decimal strings.
Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);
Json vector_to_json(const IntVector& v);
IntVector vector_from_json(const Json& j);

/// Reads the stack file format; the result is validated. Throws InputError.
StackData stack_from_json(const Json& j);
Json stack_to_json(const StackData& data);

StackData load_stack(const std::filesystem::path& path);
void save_stack(const StackData& data, const std::filesystem::path& path);

} // namespace ktoric::cli
