#ifndef JETCERT_IO_HPP
#define JETCERT_IO_HPP

#include "jetcert/frame.hpp"
#include "jetcert/morphism.hpp"

#include <iosfwd>
#include <string>

namespace jetcert {

class FileFormatError : public Error {
public:
    FileFormatError(const std::string &file, std::size_t line, const std::string &msg)
        : Error(file + ":" + std::to_string(line) + ": " + msg) {}
};

// Variety file (line oriented; a '#' at the start of a line or after
// whitespace begins a comment, so jet names like x#1 survive):
//   ring <var> <var> ...
//   ideal
//   <one generator expression per line>
//   end
Presentation read_variety_file(const std::string &path);
void write_variety_file(const std::string &path, const Presentation &p);
Presentation parse_variety(std::istream &in, const std::string &display_name);
void print_variety(std::ostream &out, const Presentation &p);

// Builtin "@name" or a path.
Presentation resolve_variety(const std::string &spec);

// Map file:
//   map <source-name> <target-name>
//   <var> -> <expression over the target variables>
//   ...
//   end
RingMap read_map_file(const std::string &path, const Presentation &source,
                      const Presentation &target);
void write_map_file(const std::string &path, const RingMap &m);

// Certificate file: a "forward" tagged map block followed by a "backward"
// tagged map block.
struct CertificateFile {
    RingMap forward;
    RingMap backward;
};
CertificateFile read_certificate_file(const std::string &path, const Presentation &source,
                                      const Presentation &target);
void write_certificate_file(const std::string &path, const IsoCertificate &cert);

// Frame file:
//   frame n=<n>
//   A:
//   <n rows of N comma-separated expressions over the base variables>
//   B:
//   <N rows of n entries>
//   C:
//   <N rows of r entries>   (omitted entirely when r = 0)
//   end
CotangentFrame read_frame_file(const std::string &path, const Presentation &variety);
void write_frame_file(const std::string &path, const CotangentFrame &f,
                      const Presentation &variety);

} // namespace jetcert

#endif
