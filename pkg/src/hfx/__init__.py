"""Exact-rational pair-basis fusion algebras, graded face algebras, and a
brute-force axiom auditor with machine-checkable counterexample witnesses."""

from .audits import (AuditReport, AxiomCheck, Witness, audit_algebra,
                     audit_antipode, audit_bialgebra_compat, audit_coalgebra,
                     replay_witness)
from .catalog import (CatalogEntry, audit_catalog_entry, catalog_get,
                      catalog_names, gen_endo_group, gen_fusion_ring,
                      gen_group_delta)
from .core import (AlgebraPresentation, BasisId, Element, LinearEndo, Scalar,
                   TensorElement, bid, comultiply, counit_of, format_scalar,
                   multiply)
from .errors import HfxError
from .face import (DirectedGraph, FaceIdempotents, OneCell,
                   ProcategoryDimData, audit_face, build_face_algebra,
                   face_idempotents, full_face_audit, graph_to_procategory,
                   replay_face_witness)
from .specfile import SpecFile, parse_spec_file, render_spec_file
from .vertex import (AntipodeMap, ContractionCheck, ContractionReport,
                     ContractionValue, DimCategory, HallFusionSpec,
                     PromonoidalDimData, build_antipode, build_hall_fusion,
                     check_antipode_contraction, check_compat_contraction,
                     check_counit_contraction, check_vn_contractions,
                     full_vertex_audit, tensor_promonoidal,
                     triple_product_dim, triple_product_dim_right,
                     validate_promonoidal)

__version__ = "0.1.0"
