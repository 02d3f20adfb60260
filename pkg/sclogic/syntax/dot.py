from itertools import count

from ..normalforms import is_basic_form
from ..sclogic_error import FormError
from ..terms import Cond


def _quote(text):
    return '"%s"' % text


def to_pydot(t, name="term"):
    """Convert a basic form to a ``pydot`` graph.

    Nodes are named ``n0, n1, ...`` in preorder. Internal nodes carry the
    atom, leaves the constant; the then-edge is labelled T and the
    else-edge F.

    @rtype: `pydot.Dot`
    """
    import pydot

    if not is_basic_form(t):
        raise FormError("Only basic forms can be drawn, got %s" % t)
    g = pydot.Dot(name, graph_type="digraph")
    ids = count()

    def visit(node):
        u = "n%d" % next(ids)
        if isinstance(node, Cond):
            g.add_node(pydot.Node(u, label=_quote(node.test.name), shape="circle"))
            for label, child in (("T", node.body), ("F", node.orelse)):
                v = visit(child)
                g.add_edge(pydot.Edge(u, v, label=_quote(label)))
        else:
            g.add_node(pydot.Node(u, label=_quote(node.value), shape="none"))
        return u

    visit(t)
    return g


def to_dot(t):
    """DOT source of the basic form ``t``."""
    return to_pydot(t).to_string()


def dump(t, filename):
    with open(filename, "w", encoding="utf-8") as f:
        f.write(to_dot(t))
