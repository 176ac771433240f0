"""blocktutor: Scratch 3 project analysis, visual-graph abstraction, and a
retrieval-augmented scaffolding dialogue engine."""

__version__ = "0.1.0"
