#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "irp/dg_field.hpp"
#include "irp/dg_space.hpp"
#include "irp/harness/run.hpp"
#include "irp/limiter.hpp"
#include "irp/riemann.hpp"
#include "irp/time_integration.hpp"

namespace irp::harness {

/// Shortest decimal text that parses back to the same double ("nan" and
/// "inf" for non-finite values). Locale independent.
std::string format_number(double value);

/// Relative paths are placed under $IRP_DG_OUTPUT_DIR when that is set.
std::string resolve_output_path(const std::string& path);

/// Columns x,rho,u,p,E,s,q,theta_last at every Gauss-Lobatto test node. s
/// and q are nan where undefined; theta_last is the cell's last limiter theta.
void write_solution_csv(std::ostream& out, const DGSpace& space, const DGField& field,
                        const InvariantRegion& region, const std::vector<CellLimiterReport>& reports);
void emit_solution_csv(const std::string& path, const DGSpace& space, const DGField& field,
                       const InvariantRegion& region, const std::vector<CellLimiterReport>& reports);

/// Columns n_cells,error_linf,order_linf,error_l1,order_l1 (empty order on
/// the first row or when undefined) plus a failure note column.
void write_table_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);
void emit_table_csv(const std::string& path, const std::vector<ConvergenceRow>& rows);

void write_diagnostics_csv(std::ostream& out, const std::vector<StepDiagnostics>& diagnostics);
void emit_diagnostics_csv(const std::string& path, const std::vector<StepDiagnostics>& diagnostics);

/// Columns x,rho,u,p,E of the exact Riemann solution at time t.
void write_riemann_csv(std::ostream& out, const RiemannProblem& problem, double t, const std::vector<double>& xs);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Numeric CSV reader (empty fields read as nan).
CsvTable read_csv(const std::string& path);

} // namespace irp::harness
