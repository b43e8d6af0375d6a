#pragma once

#include <functional>
#include <string>
#include <string_view>

// Diagnostics go to standard error; tests may capture them with setSink.
namespace oracle_forge::log {

enum class Level { Info, Warn, Error };

using Sink = std::function<void(Level, std::string_view)>;

/// Replaces the sink; returns the previous one. An empty sink restores stderr.
Sink setSink(Sink sink);

void info(std::string_view message);
void warn(std::string_view message);
void error(std::string_view message);

}  // namespace oracle_forge::log
