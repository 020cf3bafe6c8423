import logging
from typing import Optional

import networkx as nx

from circburn.core.config.settings import settings
from circburn.features.circulants.graph import build_graph, lex_product_generic
from circburn.features.circulants.schemas import CirculantSpec, ProductCheck
from circburn.features.circulants.service.normalize import normalize_spec

logger = logging.getLogger(__name__)


def lex_product_spec(g: CirculantSpec, h: CirculantSpec) -> CirculantSpec:
    """
    C(n1;S) . C(n2;T) = C(n1*n2; n1*T u U_{s in S}(n1*Z_n2 + s)).

    Signed representatives +-s are both expanded so the result matches
    lex_product_generic under the labelling (x, y) -> x + n1*y.
    """
    n1, n2 = g.n, h.n
    raw = {n1 * t for t in h.distances}
    for s in g.distances:
        for signed in (s, -s):
            raw.update(signed + n1 * y for y in range(n2))
    return normalize_spec(n1 * n2, raw)


def product_cross_check(
    g: CirculantSpec,
    h: CirculantSpec,
    max_iso_order: Optional[int] = None,
) -> ProductCheck:
    """
    Compare the circulant product formula with the generic product construction.
    """
    cap = settings.ISOMORPHISM_CHECK_MAX_ORDER if max_iso_order is None else max_iso_order
    product = lex_product_spec(g, h)
    from_formula = build_graph(product)
    generic = lex_product_generic(build_graph(g), build_graph(h))
    identical = from_formula.edges() == generic.edges()
    if identical:
        return ProductCheck(product=product, labeling_identical=True)

    logger.warning(f"{g.label()}.{h.label()}: edge sets differ under x + n1*y labelling")
    isomorphic = None
    if product.n <= cap:
        isomorphic = nx.is_isomorphic(from_formula.to_networkx(), generic.to_networkx())
    return ProductCheck(product=product, labeling_identical=False, isomorphic=isomorphic)
