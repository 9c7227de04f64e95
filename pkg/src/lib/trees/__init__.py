from .trees import UnlabeledTree, code_height, code_size, split_code
