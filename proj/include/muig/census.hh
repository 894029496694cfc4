#ifndef MUIG_CENSUS_HH
#define MUIG_CENSUS_HH

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace muig
{
    struct CensusRow
    {
        std::size_t line = 0;
        std::string code;
        int vertices = 0;
        /// Set when the line could not be parsed; the other fields are then unset.
        std::optional<std::string> parse_error;
        bool interval = false;
        /// Interval and free of the general forbidden list.
        bool characterization = false;
        /// Absent when the graph is above the oracle bound.
        std::optional<bool> oracle;
        /// Builder verdict name, or "error: ..." if it threw.
        std::string builder;
        bool discrepancy = false;
    };

    struct CensusCounts
    {
        long graphs = 0;
        long parse_errors = 0;
        long interval = 0;
        long mixed_unit = 0;
        long oracle_checked = 0;
        long builder_errors = 0;
        long discrepancies = 0;
    };

    struct CensusReport
    {
        /// In input order regardless of the job count.
        std::vector<CensusRow> rows;
        CensusCounts counts;
    };

    struct CensusOptions
    {
        int oracle_bound = 7;
        int jobs = 1;
    };

    /// One graph6 code per line; blank lines are skipped.
    auto run_census(std::string_view stream, const CensusOptions & options) -> CensusReport;

    auto census_row(std::size_t line, std::string_view code, int oracle_bound) -> CensusRow;
}

#endif
