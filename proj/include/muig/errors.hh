#ifndef MUIG_ERRORS_HH
#define MUIG_ERRORS_HH

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace muig
{
    /// Malformed graph, representation, or certificate input.
    class ParseError : public std::runtime_error
    {
        public:
            ParseError(const std::string & message, std::size_t line, std::size_t offset);

            [[nodiscard]] auto line() const noexcept -> std::size_t { return _line; }
            [[nodiscard]] auto offset() const noexcept -> std::size_t { return _offset; }

        private:
            std::size_t _line;
            std::size_t _offset;
    };

    /// A structural property that the characterization guarantees did not hold.
    ///
    /// These are never expected on valid input. They carry enough context
    /// (the pipeline stage, the vertices involved, and their intervals at the
    /// time) to localize a bug or a family transcription error.
    class InternalInconsistency : public std::runtime_error
    {
        public:
            InternalInconsistency(std::string stage, std::string detail,
                    std::vector<int> vertices = {}, std::vector<std::string> intervals = {});

            [[nodiscard]] auto stage() const noexcept -> const std::string & { return _stage; }
            [[nodiscard]] auto detail() const noexcept -> const std::string & { return _detail; }
            [[nodiscard]] auto vertices() const noexcept -> const std::vector<int> & { return _vertices; }
            [[nodiscard]] auto intervals() const noexcept -> const std::vector<std::string> & { return _intervals; }

        private:
            std::string _stage;
            std::string _detail;
            std::vector<int> _vertices;
            std::vector<std::string> _intervals;
    };

    /// The difference-constraint system behind unitization had a negative cycle.
    class UnitizationFailed : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// The brute-force oracle was asked about a graph above its size bound.
    class SizeBoundExceeded : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };
}

#endif
