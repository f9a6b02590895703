"""contactcalc: contact-surgery calculus at desk scale.

Numerical kernel for explicit contact/Liouville forms and generalized Dehn
twists, plus a symbolic calculus of open books, contact (1/k)-surgery,
branched covers, Weinstein-handle cobordisms, and Kirby diagrams.
"""

from .charts import Chart, ChartPoint, darboux_chart, cotangent_chart, \
    sphere_chart, euclidean_chart, load_sample_file
from .conditions import ConditionReport, check_contact_condition, \
    check_contact_dilation, check_two_form_dilation
from .fields import hamiltonian_vector_field, liouville_vector_field, \
    moser_field, reeb_vector_field
from .forms import OneFormField, SkewMatrixAtPoint, eval_one_form, \
    exterior_derivative, lambda_std, lambda_can, weinstein, \
    weinstein_hamiltonian, handle_form, dz_plus, theta_invariant
from .rounding import rounding_curve, smoothstep
from .twist import CotangentPoint, TwistProfile, apply_twist, \
    almost_complex_generator, boundary_displacement_probe, isotopy_phi, \
    isotopy_psi, make_profile, plane_generator, pullback_two_form
from .surgery import FillabilityFlags, ManifoldDescriptor, MonodromyWord, \
    OpenBook, PageSpec, branched_cover, catalog_M_nk, contact_surgery, \
    disk_cotangent_page, fibered_manifold, fillability_propagate, \
    liouville_sum_openbooks, reduce_word, surgery_compose, word
from .cobordism import CobordismSpec, Handle, HomologyProfile, \
    cabling_genus, euler_characteristic, gysin_sphere_bundle_homology, \
    hopf_invariant_one_exists, not_stein_certificate, self_linking_liouville, \
    stein_homology_check, sum_cobordism, twist_square_smoothly_trivial
from .kirby import KirbyDiagram, branched_cover_diagram, parse_diagram, \
    serialize_diagram, surgery_cobordism_diagram
from .scenario import Scenario, ScenarioError, parse_scenario, run_scenario

__version__ = "0.1.0"
