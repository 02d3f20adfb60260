from . import yaml_reader

parse_yaml = yaml_reader.parse_yaml
read_axioms = yaml_reader.read_axioms
