from typing import Any, List

from pydantic import BaseModel, Field


class DotTemplate(BaseModel):
    """A DOT fragment with named placeholders"""
    template: str
    variables: List[str] = Field(default_factory=list)

    def format(self, **kwargs: Any) -> str:
        """Format the template with provided variables"""
        if not self.validate_variables(**kwargs):
            missing = [v for v in self.variables if v not in kwargs]
            raise ValueError(f"missing template variables: {', '.join(missing)}")
        return self.template.format(**kwargs)

    def validate_variables(self, **kwargs: Any) -> bool:
        """Validate that all required variables are provided"""
        return all(var in kwargs for var in self.variables)


# Standard DOT fragments
GRAPH = DotTemplate(
    template="""digraph {name} {{
  rankdir=BT;
  node [fontname="Helvetica"];
{body}
}}
""",
    variables=["name", "body"]
)

INPUT_NODE = DotTemplate(
    template='  x{index} [shape=plaintext, label="x{index}"];',
    variables=["index"]
)

GATE_NODE = DotTemplate(
    template='  g{index} [shape={shape}, label="{label}"];',
    variables=["index", "shape", "label"]
)

EDGE = DotTemplate(
    template='  {tail} -> {head} [label="{weight}"];',
    variables=["tail", "head", "weight"]
)

# Re-export
__all__ = ['DotTemplate', 'GRAPH', 'INPUT_NODE', 'GATE_NODE', 'EDGE']
