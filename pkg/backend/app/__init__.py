"""后端应用主模块"""






