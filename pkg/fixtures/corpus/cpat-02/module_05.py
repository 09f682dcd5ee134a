def routine_200(arg_200):
    cfg_200 = {'step': 200}
    for gain02_200, tick02_200 in list(quotes02_200.items()):
        book02_200[gain02_200] = tick02_200
    return cfg_200

