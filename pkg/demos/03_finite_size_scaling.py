"""Finite-size scaling at reduced sizes: peaks, drift, exponents.

The full study (sizes 300-700, cutoff 800) runs in a couple of minutes via
`kerrqgt scaling --out runs/scaling`; this demo uses smaller sizes so it
finishes in seconds while showing every stage of the analysis.
"""

from kerrqgt import scaling_pipeline

report = scaling_pipeline(sizes=(60, 80, 100, 120, 150), n_cut=300,
                          peak_bracket=(1.02, 1.35),
                          collapse_window=(1.02, 1.30), collapse_step=2e-3)

diag = report.diagnostics
print("pseudo-critical points (peaks of g_ee):")
for L, ec, g in zip(diag["sizes"], diag["eps_c_by_size"], diag["g_ee_peak"]):
    print(f"  L = {L:5.0f}: eps_c = {ec:.5f}, peak g_ee = {g:9.3f}, "
          f"peak/L = {g / L:.4f}")

print(f"\ndrift fit eps_c(L) = eps_c* + a L^-b:")
print(f"  eps_c* = {report.eps_c_star:.5f}, a = {report.fit_a:.3f}, "
      f"b = {report.fit_b:.3f}")
print(f"correlation-length exponent nu = {report.nu:.4f} "
      f"(local estimates {['%.3f' % (2 / s) for s in diag['pair_slopes_gee']]})")
print(f"scaling dimensions: delta_ee = {report.delta_ee:.4f} "
      f"(five-point fit {diag['delta_ee_global']:.4f}), "
      f"delta_pp = {report.delta_pp:.4f}, delta_ep = {report.delta_ep:.4f}")
print(f"perturbation dimensions: delta_eps = {report.delta_eps:.4f}, "
      f"delta_phi = {report.delta_phi:.4f}; "
      f"2 - sum = {2 - report.delta_eps - report.delta_phi:.4f} "
      f"vs measured delta_ep = {report.delta_ep:.4f}")
print(f"collapse qualities: g_ee {report.collapse_quality_gee:.3e}, "
      f"|F| {report.collapse_quality_fep:.3e}")
opt = diag["f_collapse_optimum"]
print(f"curvature collapse optimum: nu' = {opt['nu']:.4f} at "
      f"eps_c* = {opt['eps_c_star']:.5f}")
print("\n(at these small sizes the exponents sit a few percent from their "
      "large-L values; the default sizes reproduce the quoted numbers)")
