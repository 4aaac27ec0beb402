from .text_output import output_to_text, render_document

__all__ = ["output_to_text", "render_document"]
