#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <vector>

namespace onsetpair {

// One detected note: onset/offset marks in seconds.
struct Event {
    double onset = 0.0;
    double offset = 0.0;
};

struct EventList {
    std::vector<Event> events;

    bool empty() const { return events.empty(); }
    std::size_t size() const { return events.size(); }
};

// Ground-truth annotation line: an onset with an optional offset.
struct Annotation {
    double onset = 0.0;
    std::optional<double> offset;
};

class AnnotationError : public std::runtime_error {
  public:
    AnnotationError(int line, const std::string& message)
        : std::runtime_error(message), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

// Annotation file format: one event per line, "onset_seconds" or
// "onset_seconds<TAB>offset_seconds". Blank lines are ignored.
std::vector<Annotation> read_annotations(const std::filesystem::path& path);

// Writes events sorted ascending, 6 decimal places, tab separated.
void write_annotations(const EventList& events, const std::filesystem::path& path);

std::vector<Annotation> to_annotations(const EventList& events);

}  // namespace onsetpair
