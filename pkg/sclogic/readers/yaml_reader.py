from io import StringIO

from ..sclogic_error import AxiomSetError

TAG_HINT = "values starting with '!' must be quoted"


def _pyyaml(f):
    import yaml

    try:
        Loader = yaml.CSafeLoader
    except AttributeError:  # System does not have libyaml
        Loader = yaml.SafeLoader

    try:
        return list(yaml.load_all(f, Loader=Loader))
    except yaml.constructor.ConstructorError as e:
        raise AxiomSetError("Unknown YAML tag, %s: %s" % (TAG_HINT, e.problem)) from e
    except yaml.YAMLError as e:
        raise AxiomSetError("Malformed axiom file: %s" % e) from e


def _ruamel(f):
    from ruamel.yaml import YAML
    from ruamel.yaml.constructor import ConstructorError
    from ruamel.yaml.error import YAMLError

    yaml = YAML(typ="safe")
    try:
        return list(yaml.load_all(f))
    except ConstructorError as e:
        raise AxiomSetError("Unknown YAML tag, %s: %s" % (TAG_HINT, e.problem)) from e
    except YAMLError as e:
        raise AxiomSetError("Malformed axiom file: %s" % e) from e


_parsers = {"pyyaml": _pyyaml, "ruamel": _ruamel}


def parse_yaml(path=None, parser="pyyaml", content=None):
    try:
        parse = _parsers[parser.lower()]
    except KeyError:
        raise NameError('Parser "' + parser + '" is not supported\nAvailable parsers are listed below:\nPyYAML\nruamel')
    if (path is None and content is None) or (path is not None and content is not None):
        raise TypeError("Pass either path= or content=, not both")
    if path is not None:
        with open(path, encoding="utf-8") as f:
            return parse(f)
    else:
        return parse(StringIO(content))


def read_axioms(path=None, parser="pyyaml", content=None):
    """
    Read an axiom file: one mapping from axiom name to ``"lhs = rhs"``.

    Returns the mapping with names and equation texts as strings, in file
    order. Parsing the equations is left to the caller.
    """
    docs = parse_yaml(path, parser, content)
    source = path if path is not None else "<string>"
    if len(docs) != 1 or docs[0] is None:
        raise AxiomSetError("%s must hold exactly one mapping of axioms" % source)
    raw = docs[0]
    if not isinstance(raw, dict):
        raise AxiomSetError("%s: expected a mapping of axioms, got %s" % (source, type(raw).__name__))
    axioms = {}
    for name, text in raw.items():
        if not isinstance(text, str):
            raise AxiomSetError('%s: axiom "%s" must be a string "lhs = rhs", got %r' % (source, name, text))
        axioms[str(name)] = text
    return axioms
