#include "oracle_forge/log.hpp"

#include <iostream>
#include <mutex>

namespace oracle_forge::log {
namespace {

std::mutex& sinkMutex() {
    static std::mutex m;
    return m;
}

Sink& currentSink() {
    static Sink sink;
    return sink;
}

void emit(Level level, std::string_view message) {
    std::lock_guard lock(sinkMutex());
    if (auto& sink = currentSink()) {
        sink(level, message);
        return;
    }
    static constexpr std::string_view names[] = {"info", "warning", "error"};
    std::cerr << "oracle-forge: " << names[static_cast<int>(level)] << ": " << message << '\n';
}

}  // namespace

Sink setSink(Sink sink) {
    std::lock_guard lock(sinkMutex());
    Sink previous = std::move(currentSink());
    currentSink() = std::move(sink);
    return previous;
}

void info(std::string_view message) { emit(Level::Info, message); }
void warn(std::string_view message) { emit(Level::Warn, message); }
void error(std::string_view message) { emit(Level::Error, message); }

}  // namespace oracle_forge::log
