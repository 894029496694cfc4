#include <muig/errors.hh>

#include <sstream>

using std::string;
using std::vector;

namespace muig
{
    ParseError::ParseError(const string & message, std::size_t line, std::size_t offset) :
        std::runtime_error("parse error at line " + std::to_string(line) + ", byte " + std::to_string(offset) + ": " + message),
        _line(line),
        _offset(offset)
    {
    }

    namespace
    {
        auto describe(const string & stage, const string & detail, const vector<int> & vertices, const vector<string> & intervals) -> string
        {
            std::ostringstream s;
            s << "internal inconsistency in " << stage << ": " << detail;
            if (! vertices.empty()) {
                s << " [vertices";
                for (std::size_t i = 0; i < vertices.size(); ++i) {
                    s << ' ' << vertices[i];
                    if (i < intervals.size())
                        s << '=' << intervals[i];
                }
                s << ']';
            }
            return s.str();
        }
    }

    InternalInconsistency::InternalInconsistency(string stage, string detail, vector<int> vertices, vector<string> intervals) :
        std::runtime_error(describe(stage, detail, vertices, intervals)),
        _stage(std::move(stage)),
        _detail(std::move(detail)),
        _vertices(std::move(vertices)),
        _intervals(std::move(intervals))
    {
    }
}
